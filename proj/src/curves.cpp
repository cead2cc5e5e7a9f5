#include "weber/curves.hpp"

#include <numeric>

#include "weber/error.hpp"

namespace weber {

namespace {

GF2Elt c(const GF2Field& f, long v) { return GF2Elt::from_int(f, v); }

// Extended gcd: returns inverse of a modulo m, or nullopt when not coprime.
std::optional<GFPoly> inverse_mod(const GFPoly& a, const GFPoly& m) {
  const GF2Field& f = m.field();
  GFPoly r0 = m, r1 = a % m;
  GFPoly s0(f), s1(f, {one(f)});
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    GFPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) return std::nullopt;
  return (s0 * r0.leading().inverse()) % m;
}

bool is_kth_power(const GF2Elt& r, std::uint64_t k) {
  if (r.is_zero()) return true;
  std::uint64_t q1 = r.p() * r.p() - 1;
  return r.pow(q1 / std::gcd(k, q1)).is_one();
}

}  // namespace

Curve::Curve(const GF2Elt& a1_, const GF2Elt& a2_, const GF2Elt& a3_, const GF2Elt& a4_, const GF2Elt& a6_)
    : a1(a1_), a2(a2_), a3(a3_), a4(a4_), a6(a6_), field_(a1_.field()) {
  if (discriminant().is_zero()) throw SingularParameter("singular Weierstrass equation (discriminant 0)");
}

Curve Curve::from_a2a4a6(const GF2Elt& a2, const GF2Elt& a4, const GF2Elt& a6) {
  GF2Elt z = zero(a2.field());
  return Curve(z, a2, z, a4, a6);
}

GF2Elt Curve::b2() const { return a1 * a1 + c(field_, 4) * a2; }
GF2Elt Curve::b4() const { return c(field_, 2) * a4 + a1 * a3; }
GF2Elt Curve::b6() const { return a3 * a3 + c(field_, 4) * a6; }
GF2Elt Curve::b8() const {
  return a1 * a1 * a6 + c(field_, 4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
}
GF2Elt Curve::c4() const { return b2() * b2() - c(field_, 24) * b4(); }
GF2Elt Curve::c6() const {
  return -(b2() * b2() * b2()) + c(field_, 36) * b2() * b4() - c(field_, 216) * b6();
}
GF2Elt Curve::discriminant() const {
  GF2Elt B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
  return -(B2 * B2 * B8) - c(field_, 8) * B4 * B4 * B4 - c(field_, 27) * B6 * B6 + c(field_, 9) * B2 * B4 * B6;
}
GF2Elt Curve::j_invariant() const {
  GF2Elt C4 = c4();
  return C4 * C4 * C4 / discriminant();
}

bool Curve::contains(const Point& P) const {
  if (P.is_identity()) return true;
  const GF2Elt &x = P.X, &y = P.Y;
  return y * y + a1 * x * y + a3 * y == x * x * x + a2 * x * x + a4 * x + a6;
}

Point Curve::negate(const Point& P) const {
  if (P.is_identity()) return P;
  return Point::affine(P.X, -P.Y - a1 * P.X - a3);
}

Point Curve::add(const Point& P, const Point& Q) const {
  if (P.is_identity()) return Q;
  if (Q.is_identity()) return P;
  const GF2Elt &x1 = P.X, &y1 = P.Y, &x2 = Q.X, &y2 = Q.Y;
  GF2Elt lambda, nu;
  if (x1 == x2) {
    if ((y1 + y2 + a1 * x2 + a3).is_zero()) return Point::identity(field_);
    GF2Elt den = c(field_, 2) * y1 + a1 * x1 + a3;
    lambda = (c(field_, 3) * x1 * x1 + c(field_, 2) * a2 * x1 + a4 - a1 * y1) / den;
    nu = (-(x1 * x1 * x1) + a4 * x1 + c(field_, 2) * a6 - a3 * y1) / den;
  } else {
    GF2Elt den = x2 - x1;
    lambda = (y2 - y1) / den;
    nu = (y1 * x2 - y2 * x1) / den;
  }
  GF2Elt x3 = lambda * lambda + a1 * lambda - a2 - x1 - x2;
  GF2Elt y3 = -(lambda + a1) * x3 - nu - a3;
  return Point::affine(x3, y3);
}

Point Curve::mul(long k, const Point& P) const {
  if (k < 0) return mul(-k, negate(P));
  Point r = Point::identity(field_), base = P;
  while (k) {
    if (k & 1) r = add(r, base);
    base = dbl(base);
    k >>= 1;
  }
  return r;
}

Point Curve::random_point(std::mt19937_64& rng) const {
  const GF2Elt half = c(field_, 2).inverse();
  for (;;) {
    GF2Elt x(field_, rng() % field_.p, rng() % field_.p);
    GF2Elt A = a1 * x + a3;
    GF2Elt rhs = x * x * x + a2 * x * x + a4 * x + a6 + A * A * half * half;
    auto s = sqrt(rhs);
    if (!s) continue;
    GF2Elt root = (rng() & 1) ? -*s : *s;
    return Point::affine(x, root - A * half);
  }
}

GFPoly Curve::cubic() const {
  if (!short_form()) throw DomainError("cubic() needs a1 = a3 = 0");
  return GFPoly(field_, {a6, a4, a2, one(field_)});
}

GFPoly Curve::division_poly(int n) const {
  if (n < 0) throw DomainError("division polynomial index must be >= 0");
  const GF2Field& f = field_;
  GF2Elt B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
  GFPoly R(f, {B6, c(f, 2) * B4, B2, c(f, 4)});  // (2y + a1 x + a3)^2
  GFPoly R2 = R * R;
  std::vector<GFPoly> g;
  g.push_back(GFPoly(f));
  g.push_back(GFPoly(f, {one(f)}));
  g.push_back(GFPoly(f, {one(f)}));
  g.push_back(GFPoly(f, {B8, c(f, 3) * B6, c(f, 3) * B4, B2, c(f, 3)}));
  g.push_back(GFPoly(f, {B4 * B8 - B6 * B6, B2 * B8 - B4 * B6, c(f, 10) * B8, c(f, 10) * B6, c(f, 5) * B4, B2,
                         c(f, 2)}));
  for (int k = 5; k <= n; ++k) {
    int m = k / 2;
    if (k % 2 == 1) {
      if (m % 2 == 0) {
        g.push_back(R2 * g[m + 2] * g[m] * g[m] * g[m] - g[m - 1] * g[m + 1] * g[m + 1] * g[m + 1]);
      } else {
        g.push_back(g[m + 2] * g[m] * g[m] * g[m] - R2 * g[m - 1] * g[m + 1] * g[m + 1] * g[m + 1]);
      }
    } else {
      g.push_back(g[m] * (g[m + 2] * g[m - 1] * g[m - 1] - g[m - 2] * g[m + 1] * g[m + 1]));
    }
  }
  return g[static_cast<std::size_t>(n)];
}

std::optional<GF2Elt> twist_factor(const Curve& a, const Curve& b) {
  if (a.j_invariant() != b.j_invariant()) return std::nullopt;
  GF2Elt c4a = a.c4(), c4b = b.c4(), c6a = a.c6(), c6b = b.c6();
  if (c4a.is_zero() || c6a.is_zero()) return std::nullopt;
  return (c6b * c4a) / (c6a * c4b);
}

bool isomorphic(const Curve& a, const Curve& b) {
  if (a.j_invariant() != b.j_invariant()) return false;
  GF2Elt c4a = a.c4(), c4b = b.c4(), c6a = a.c6(), c6b = b.c6();
  if (c4a.is_zero()) return is_kth_power(c6b / c6a, 6);
  if (c6a.is_zero()) return is_kth_power(c4b / c4a, 4);
  return is_square((c6b * c4a) / (c6a * c4b));
}

// ---------------------------------------------------------------------------
// Families

Curve family_E0(const GF2Elt& u, int n) {
  const GF2Field f = u.field();
  GF2Elt s = u.pow(static_cast<std::uint64_t>(n));
  GF2Elt m = s - c(f, 64);
  if (s.is_zero() || m.is_zero()) throw SingularParameter("family E0: u^n in {0, 64}");
  return Curve::from_a2a4a6(-(m / c(f, 4)), -m, zero(f));
}

Curve family_E1(const GF2Elt& u, int n) {
  const GF2Field f = u.field();
  GF2Elt s = u.pow(static_cast<std::uint64_t>(n));
  GF2Elt m = s - c(f, 64);
  if (s.is_zero() || m.is_zero()) throw SingularParameter("family E1: u^n in {0, 64}");
  return Curve::from_a2a4a6(m / c(f, 2), m / c(f, 16) * s, zero(f));
}

Curve family_C(const GF2Elt& s, FamilyC which) {
  const GF2Field f = s.field();
  if (s.is_zero() || (s + one(f)).is_zero()) throw SingularParameter("family C: s in {0, -1}");
  if (which == FamilyC::C0) return Curve::from_a2a4a6(s - one(f), -s, zero(f));
  return Curve::from_a2a4a6(c(f, 2) * s + c(f, 4), s * s, zero(f));
}

// ---------------------------------------------------------------------------
// Isogenies

Point Isogeny::apply(const Point& P) const {
  if (P.is_identity()) return Point::identity(codomain.field());
  GF2Elt d = x_den.eval(P.X);
  if (d.is_zero()) return Point::identity(codomain.field());
  GF2Elt nval = x_num.eval(P.X);
  GF2Elt dn = x_num.derivative().eval(P.X), dd = x_den.derivative().eval(P.X);
  GF2Elt x = nval / d;
  GF2Elt slope = (dn * d - nval * dd) / (d * d);
  return Point::affine(x, P.Y * slope);
}

namespace {

struct PowerSums {
  GF2Elt p1, p2, p3;
};

PowerSums power_sums(const GFPoly& h) {
  const GF2Field& f = h.field();
  int n = h.degree();
  auto coef = [&](int k) { return k >= 0 ? h.coeff(static_cast<std::size_t>(k)) : zero(f); };
  GF2Elt e1 = -coef(n - 1);
  GF2Elt e2 = n >= 2 ? coef(n - 2) : zero(f);
  GF2Elt e3 = n >= 3 ? -coef(n - 3) : zero(f);
  return {e1, e1 * e1 - c(f, 2) * e2, e1 * e1 * e1 - c(f, 3) * e1 * e2 + c(f, 3) * e3};
}

// Checks that the roots of the odd part h are the x-coordinates of the
// nonzero points of a subgroup (up to sign).
void check_odd_kernel(const Curve& E, const GFPoly& h) {
  const GF2Field& f = E.field();
  const int n = h.degree();
  const int N = 2 * n + 1;
  GF2Elt B2 = E.b2(), B4 = E.b4(), B6 = E.b6();
  GFPoly R = GFPoly(f, {B6, c(f, 2) * B4, B2, c(f, 4)}) % h;
  GFPoly R2 = (R * R) % h;
  std::vector<GFPoly> g;
  g.push_back(GFPoly(f));
  g.push_back(GFPoly(f, {one(f)}));
  g.push_back(GFPoly(f, {one(f)}));
  g.push_back(E.division_poly(3) % h);
  g.push_back(E.division_poly(4) % h);
  for (int k = 5; k <= N + 1; ++k) {
    int m = k / 2;
    auto M = [&](const GFPoly& a, const GFPoly& b) { return (a * b) % h; };
    if (k % 2 == 1) {
      GFPoly cube_m = M(M(g[m], g[m]), g[m]);
      GFPoly cube_m1 = M(M(g[m + 1], g[m + 1]), g[m + 1]);
      if (m % 2 == 0) {
        g.push_back(M(M(R2, g[m + 2]), cube_m) - M(g[m - 1], cube_m1));
      } else {
        g.push_back(M(g[m + 2], cube_m) - M(M(R2, g[m - 1]), cube_m1));
      }
    } else {
      g.push_back(M(g[m], M(g[m + 2], M(g[m - 1], g[m - 1])) - M(g[m - 2], M(g[m + 1], g[m + 1]))));
    }
  }
  if (!g[static_cast<std::size_t>(N)].is_zero())
    throw KernelError("kernel polynomial does not divide the " + std::to_string(N) + "-division polynomial");
  GFPoly x(f, {zero(f), one(f)});
  for (int k = 2; k <= n; ++k) {
    // x([k]P) = x - psi_{k-1} psi_{k+1} / psi_k^2
    GFPoly num, den;
    if (k % 2 == 1) {
      num = (R * ((g[k - 1] * g[k + 1]) % h)) % h;
      den = (g[k] * g[k]) % h;
    } else {
      num = (g[k - 1] * g[k + 1]) % h;
      den = (R * ((g[k] * g[k]) % h)) % h;
    }
    // Roots where psi_k vanishes belong to points killed by k; check the rest.
    GFPoly rest = h / gcd(den, h);
    if (rest.degree() < 1) continue;
    auto inv = inverse_mod(den, rest);
    if (!inv) throw InternalError("psi_k not invertible after removing common roots");
    GFPoly xk = (x - num * *inv) % rest;
    if (!(h.compose(xk) % rest).is_zero()) throw KernelError("roots of the kernel polynomial are not closed under [k]");
  }
}

}  // namespace

Isogeny velu(const Curve& E, const GFPoly& h_in) {
  if (!E.short_form()) throw DomainError("velu() needs a curve with a1 = a3 = 0");
  if (h_in.degree() < 1) throw KernelError("kernel polynomial must have degree >= 1");
  const GF2Field& f = E.field();
  GFPoly h = h_in.monic();
  if (gcd(h, h.derivative()).degree() > 0) throw KernelError("kernel polynomial is not squarefree");
  GFPoly F = E.cubic();
  GFPoly Fp = F.derivative();
  GFPoly h2 = gcd(h, F);
  GFPoly H = h / h2;
  if (h2.degree() == 2) throw KernelError("two 2-torsion points without their sum do not form a subgroup");
  const int n = H.degree(), n2 = h2.degree();
  if (n > 0) check_odd_kernel(E, H);

  const GF2Elt a2 = E.a2, a4 = E.a4, a6 = E.a6;
  GF2Elt t = zero(f), w = zero(f);
  GF2Elt s1 = zero(f), s1_2 = zero(f);
  if (n > 0) {
    PowerSums ps = power_sums(H);
    s1 = ps.p1;
    t += c(f, 2) * (c(f, 3) * ps.p2 + c(f, 2) * a2 * ps.p1 + c(f, n) * a4);
    w += c(f, 10) * ps.p3 + c(f, 8) * a2 * ps.p2 + c(f, 6) * a4 * ps.p1 + c(f, 4 * n) * a6;
  }
  if (n2 > 0) {
    PowerSums ps = power_sums(h2);
    s1_2 = ps.p1;
    t += c(f, 3) * ps.p2 + c(f, 2) * a2 * ps.p1 + c(f, n2) * a4;
    w += c(f, 3) * ps.p3 + c(f, 2) * a2 * ps.p2 + a4 * ps.p1;
  }
  GF2Elt na4 = a4 - c(f, 5) * t;
  GF2Elt na6 = a6 - c(f, 4) * a2 * t - c(f, 7) * w;

  GFPoly X(f, {zero(f), one(f)});
  GFPoly one_poly(f, {one(f)});
  GFPoly Hp = H.derivative(), Hpp = Hp.derivative();
  GFPoly D = H * H * h2;
  GFPoly num = X * D;
  if (n > 0) {
    GFPoly lin(f, {-(c(f, 2) * s1), c(f, 2 * n)});  // 2(n x - s1)
    num = num + lin * D - Fp * Hp * H * h2 * c(f, 2) - F * (Hpp * H - Hp * Hp) * h2 * c(f, 4);
  }
  if (n2 > 0) {
    GFPoly lin2(f, {c(f, 3) * s1_2 + c(f, 2 * n2) * a2, c(f, 3 * n2)});  // 3(n2 x + s) + 2 a2 n2
    num = num + (Fp * h2.derivative() - lin2 * h2) * H * H;
  }
  GFPoly g = gcd(num, D);
  Isogeny iso;
  iso.domain = E;
  iso.codomain = Curve::from_a2a4a6(a2, na4, na6);
  iso.kernel_polynomial = h;
  iso.x_num = num / g;
  iso.x_den = D / g;
  iso.degree = 1 + n2 + 2 * n;
  return iso;
}

Isogeny two_isogeny_quotient(const Curve& E, const Point& T) {
  if (T.is_identity() || !E.contains(T)) throw DomainError("two_isogeny_quotient: T must be a point of E other than O");
  if (!E.dbl(T).is_identity()) throw DomainError("two_isogeny_quotient: T is not 2-torsion");
  return velu(E, GFPoly::linear(T.X));
}

}  // namespace weber
