#include "weber/chains.hpp"

#include <functional>

#include "weber/error.hpp"

namespace weber {

namespace {

GF2Elt I(const GF2Field& f, long v) { return GF2Elt::from_int(f, v); }

GFPoly X(const GF2Field& f) { return GFPoly(f, {zero(f), one(f)}); }

// x -> (x - c)^2 / x
Isogeny square_form(const Curve& dom, const Curve& cod, const GF2Elt& c) {
  const GF2Field f = dom.field();
  GFPoly l = GFPoly::linear(c);
  return Isogeny{dom, cod, X(f), l * l, X(f), 2};
}

// x -> (x^2 - c) / x
Isogeny difference_form(const Curve& dom, const Curve& cod, const GF2Elt& c) {
  const GF2Field f = dom.field();
  return Isogeny{dom, cod, X(f), GFPoly(f, {-c, zero(f), one(f)}), X(f), 2};
}

// y^2 = x (x + r) (x + s)
Curve legendre_form(const GF2Elt& r, const GF2Elt& s) {
  return Curve::from_a2a4a6(r + s, r * s, zero(r.field()));
}

void require_nonzero(const GF2Elt& v, const char* name) {
  if (v.is_zero()) throw DegenerateSeed(std::string("chain constant ") + name + " vanishes");
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw InternalError("chain identity failed: " + what);
}

void check_step(const Isogeny& phi, const Point& T, std::mt19937_64& rng, int k) {
  const GF2Field f = phi.domain.field();
  const std::string tag = "phi" + std::to_string(k);
  Point S = Point::affine(zero(f), zero(f));
  expect(phi.apply(S).is_identity(), tag + " kills (0,0)");
  for (int i = 0; i < 8; ++i) {
    Point P = phi.domain.random_point(rng), Q = phi.domain.random_point(rng);
    Point a = phi.apply(P), b = phi.apply(Q);
    expect(phi.codomain.contains(a), tag + " lands on the codomain");
    expect(phi.apply(phi.domain.add(P, Q)) == phi.codomain.add(a, b), tag + " is a homomorphism");
  }
  if (!T.is_identity()) {
    expect(phi.domain.contains(T), "T" + std::to_string(k) + " on the curve");
    expect(phi.domain.dbl(T) == S, "2T" + std::to_string(k) + " = (0,0)");
    expect(phi.apply(T) == S, tag + "(T" + std::to_string(k) + ") = (0,0)");
  }
}

std::uint64_t seed_for(const GF2Elt& t3) { return 0x9e3779b97f4a7c15ULL ^ (t3.a() * 1000003ULL + t3.b()); }

}  // namespace

ChainWitness build_chain(const GF2Field& f, const GF2Elt& t3, ChainVariant variant) {
  ChainWitness w;
  w.variant = variant;
  w.t3 = t3;
  w.t2 = t3 * t3;
  w.t1 = w.t2 * w.t2;
  w.t0 = w.t1 * w.t1;
  require_nonzero(w.t0, "t0");
  const GF2Elt z8 = nth_root_of_unity(f, 8);
  const GF2Elt i = z8 * z8;
  const GF2Elt four = I(f, 4);

  try {
    if (variant == ChainVariant::Standard) {
      w.c0 = i * w.t1;
      w.e0 = w.t1 + i;
      require_nonzero(w.e0, "e0");
      w.c1 = I(f, 2) * z8 * w.t2 * (w.t1 + i);
      w.e1 = (w.t2 + z8) * (w.t2 + z8);
      require_nonzero(w.c1, "c1");
      require_nonzero(w.e1, "e1");
      w.c2 = -(four * w.c1 * w.e1 * w.e1);
      w.c3 = w.e1 * w.e1 + four * w.c1;
      w.curves[0] = legendre_form(-one(f), w.t0);
      w.curves[1] = legendre_form(four * w.c0, w.e0 * w.e0);
      w.curves[2] = legendre_form(four * w.c1, w.e1 * w.e1);
      // (x^2 + 4 c2)(x + c3)
      w.curves[3] = Curve::from_a2a4a6(w.c3, four * w.c2, four * w.c2 * w.c3);
      w.isogenies[0] = square_form(w.curves[0], w.curves[1], w.c0);
      w.isogenies[1] = square_form(w.curves[1], w.curves[2], w.c1);
      w.isogenies[2] = difference_form(w.curves[2], w.curves[3], w.c2);
    } else {
      w.c0 = w.t1;
      w.e0 = w.t1 + one(f);
      require_nonzero(w.e0, "e0");
      w.c1 = I(f, 2) * w.t2 * w.e0;
      w.e1 = (w.t2 + one(f)) * (w.t2 + one(f));
      require_nonzero(w.c1, "c1");
      require_nonzero(w.e1, "e1");
      w.curves[0] = legendre_form(one(f), w.t0);
      w.curves[1] = legendre_form(four * w.c0, w.e0 * w.e0);
      w.curves[2] = legendre_form(four * w.c1, w.e1 * w.e1);
      auto u3 = sqrt(I(f, 8) * w.e0);
      if (!u3) throw NeedsExtension("8*e0 = " + (I(f, 8) * w.e0).encode() + " is not a square in F_{p^2}");
      w.u3 = *u3;
      w.c2 = w.t3 * w.u3 * w.e1;
      w.e2 = w.t3 * w.u3 + w.e1;
      require_nonzero(w.c2, "c2");
      require_nonzero(w.e2, "e2");
      w.curves[3] = legendre_form(four * w.c2, w.e2 * w.e2);
      w.isogenies[0] = square_form(w.curves[0], w.curves[1], w.c0);
      w.isogenies[1] = square_form(w.curves[1], w.curves[2], w.c1);
      w.isogenies[2] = square_form(w.curves[2], w.curves[3], w.c2);
    }
  } catch (const SingularParameter& e) {
    throw DegenerateSeed(std::string("singular curve in chain: ") + e.what());
  }
  w.torsion[0] = Point::affine(w.c0, w.c0 * w.e0);
  w.torsion[1] = Point::affine(w.c1, w.c1 * w.e1);

  std::mt19937_64 rng(seed_for(t3));
  check_step(w.isogenies[0], w.torsion[0], rng, 0);
  check_step(w.isogenies[1], w.torsion[1], rng, 1);
  check_step(w.isogenies[2], Point::identity(f), rng, 2);
  for (int k = 0; k < 3; ++k) {
    Isogeny q = two_isogeny_quotient(w.curves[k], Point::affine(zero(f), zero(f)));
    expect(q.codomain.j_invariant() == w.curves[k + 1].j_invariant(), "codomain j of step " + std::to_string(k));
  }
  if (variant == ChainVariant::Twisted) {
    // The other two 2-torsion points of C0 collapse to one point of C1[2].
    Point img = Point::affine(-(w.e0 * w.e0), zero(f));
    expect(w.isogenies[0].apply(Point::affine(-one(f), zero(f))) == img, "phi0((-1,0))");
    expect(w.isogenies[0].apply(Point::affine(-w.t0, zero(f))) == img, "phi0((-t0,0))");
  }
  return w;
}

bool legendre_step_holds(const GF2Elt& lam0, const GF2Elt& lam1) {
  if (lam0.is_zero()) throw DegenerateSeed("Legendre invariant vanishes");
  const GF2Field f = lam0.field();
  GF2Elt lhs = lam1 * (lam1 - one(f));
  GF2Elt d = lam0 - one(f);
  return lhs == d * d / (I(f, 16) * lam0);
}

std::array<GF2Elt, 4> legendre_sequence(const ChainWitness& w) {
  if (w.variant != ChainVariant::Twisted) throw DomainError("Legendre sequence is defined for the twisted chain");
  const GF2Field f = w.t0.field();
  const GF2Elt four = I(f, 4);
  for (const GF2Elt* c : {&w.c0, &w.c1, &w.c2})
    if (c->is_zero()) throw DegenerateSeed("Legendre invariant has zero denominator");
  std::array<GF2Elt, 4> lam = {w.t0, w.e0 * w.e0 / (four * w.c0), w.e1 * w.e1 / (four * w.c1),
                               w.e2 * w.e2 / (four * w.c2)};
  for (int k = 0; k < 3; ++k) {
    if (lam[k] == one(f)) throw DegenerateSeed("Legendre invariant equals 1");
  }
  return lam;
}

std::pair<GF2Elt, GF2Elt> twist_chain_seed(const GF2Elt& s3, const GF2Elt& t3, long i1, long i2) {
  GF2Elt z8 = nth_root_of_unity(s3.field(), 8);
  return {z8.pow_signed(i1) * s3, z8.pow_signed(i2) * t3};
}

namespace {

// outer(N/D) for outer = n/d, as a pair of polynomials in x.
std::pair<GFPoly, GFPoly> compose_rational(const GFPoly& n, const GFPoly& d, const GFPoly& N, const GFPoly& D) {
  const GF2Field f = N.field();
  int k = std::max(n.degree(), d.degree());
  std::vector<GFPoly> Npow{GFPoly(f, {one(f)})}, Dpow{GFPoly(f, {one(f)})};
  for (int e = 1; e <= k; ++e) {
    Npow.push_back(Npow.back() * N);
    Dpow.push_back(Dpow.back() * D);
  }
  auto homog = [&](const GFPoly& p) {
    GFPoly acc(f);
    for (int e = 0; e <= p.degree(); ++e)
      acc = acc + Npow[static_cast<std::size_t>(e)] * Dpow[static_cast<std::size_t>(k - e)] * p.coeff(e);
    return acc;
  };
  GFPoly num = homog(n), den = homog(d);
  GFPoly g = gcd(num, den);
  GF2Elt lc = (den / g).leading();
  return {num / g * lc.inverse(), den / g * lc.inverse()};
}

}  // namespace

std::pair<GFPoly, GFPoly> composite_x_map(const ChainWitness& w) {
  std::pair<GFPoly, GFPoly> acc{w.isogenies[0].x_num, w.isogenies[0].x_den};
  for (int k = 1; k < 3; ++k) acc = compose_rational(w.isogenies[k].x_num, w.isogenies[k].x_den, acc.first, acc.second);
  return acc;
}

CompositeDegree composite_degree(const ChainWitness& w) {
  auto [num, den] = composite_x_map(w);
  GFPoly radical = den / gcd(den, den.derivative());
  return {std::max(num.degree(), den.degree()), radical.degree()};
}

bool composite_agrees(const ChainWitness& w, std::mt19937_64& rng, int samples) {
  auto [num, den] = composite_x_map(w);
  for (int i = 0; i < samples; ++i) {
    Point P = w.curves[0].random_point(rng);
    Point Q = P;
    for (const auto& phi : w.isogenies) Q = phi.apply(Q);
    GF2Elt d = den.eval(P.X);
    if (d.is_zero()) {
      if (!Q.is_identity()) return false;
      continue;
    }
    if (Q.is_identity() || Q.X != num.eval(P.X) / d) return false;
  }
  return true;
}

}  // namespace weber
