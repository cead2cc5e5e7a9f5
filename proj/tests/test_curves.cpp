#include <random>

#include "doctest.h"
#include "weber/curves.hpp"
#include "weber/error.hpp"
#include "weber/modpoly.hpp"
#include "weber/reduction.hpp"

using namespace weber;

namespace {

GF2Elt I(const GF2Field& f, long v) { return GF2Elt::from_int(f, v); }

GF2Elt random_elt(const GF2Field& f, std::mt19937_64& rng) { return GF2Elt(f, rng() % f.p, rng() % f.p); }

// Order of P by brute force; fine for the small fields used here.
long point_order(const Curve& E, const Point& P) {
  Point Q = P;
  long k = 1;
  while (!Q.is_identity()) {
    Q = E.add(Q, P);
    ++k;
  }
  return k;
}

// Kernel polynomial of <Q> for Q of odd order, or of order 2.
GFPoly kernel_poly(const Curve& E, const Point& Q, long order) {
  const GF2Field f = E.field();
  GFPoly h(f, {one(f)});
  for (long k = 1; k <= order / 2; ++k) h = h * GFPoly::linear(E.mul(k, Q).X);
  return h;
}

// A random curve over F_{p^2} together with a point of exact order ell.
std::pair<Curve, Point> curve_with_torsion(const GF2Field& f, long ell, std::mt19937_64& rng) {
  for (;;) {
    Curve E;
    try {
      E = Curve::from_a2a4a6(zero(f), random_elt(f, rng), random_elt(f, rng));
    } catch (const SingularParameter&) {
      continue;
    }
    Point P = E.random_point(rng);
    long n = point_order(E, P);
    if (n % ell == 0) return {E, E.mul(n / ell, P)};
  }
}

const BiPoly& classical(int ell) {
  static std::map<int, BiPoly> cache;
  auto it = cache.find(ell);
  if (it == cache.end()) it = cache.emplace(ell, generate(line_by_name("j"), ell)).first;
  return it->second;
}

void check_homomorphism(const Isogeny& phi, std::mt19937_64& rng) {
  const Curve& E = phi.domain;
  for (int i = 0; i < 10; ++i) {
    Point P = E.random_point(rng), R = E.random_point(rng);
    Point iP = phi.apply(P), iR = phi.apply(R);
    CHECK(phi.codomain.contains(iP));
    CHECK(phi.apply(E.add(P, R)) == phi.codomain.add(iP, iR));
  }
}

}  // namespace

TEST_CASE("group law on a small curve") {
  GF2Field f = make_field(101);
  std::mt19937_64 rng(7);
  Curve E(I(f, 1), I(f, 2), I(f, 3), I(f, 4), I(f, 5));
  for (int i = 0; i < 20; ++i) {
    Point P = E.random_point(rng), Q = E.random_point(rng), R = E.random_point(rng);
    CHECK(E.contains(P));
    CHECK(E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R)));
    CHECK(E.add(P, Q) == E.add(Q, P));
    CHECK(E.add(P, E.negate(P)).is_identity());
    CHECK(E.mul(5, P) == E.add(E.mul(2, P), E.mul(3, P)));
  }
  // Over F_{p^2} the group order is (p+1)^2 - t^2 for the F_p trace t,
  // so [N]P = O for N = #E(F_{p^2}) computed by counting over F_p.
  long count = 1;
  for (long x = 0; x < 101; ++x)
    for (long y = 0; y < 101; ++y)
      if (E.contains(Point::affine(I(f, x), I(f, y)))) ++count;
  long t = 101 + 1 - count;
  long N = (101 + 1) * (101 + 1) - t * t;
  for (int i = 0; i < 5; ++i) CHECK(E.mul(N, E.random_point(rng)).is_identity());
  CHECK_THROWS_AS(Curve::from_a2a4a6(zero(f), zero(f), zero(f)), SingularParameter);
}

TEST_CASE("division polynomials vanish on torsion") {
  GF2Field f = make_field(103);
  std::mt19937_64 rng(11);
  for (long ell : {3L, 5L, 7L}) {
    auto [E, Q] = curve_with_torsion(f, ell, rng);
    CHECK(E.division_poly(static_cast<int>(ell)).eval(Q.X).is_zero());
    CHECK(E.division_poly(static_cast<int>(ell)).degree() == (ell * ell - 1) / 2);
  }
  Curve E = Curve::from_a2a4a6(I(f, 2), I(f, 3), I(f, 5));
  CHECK(E.division_poly(4).degree() == 6);
  CHECK(E.division_poly(6).degree() == 16);
}

TEST_CASE("family invariants match closed forms") {
  GF2Field f = make_field(1009);
  std::mt19937_64 rng(3);
  for (int n : {1, 3, 8, 24}) {
    for (int i = 0; i < 10; ++i) {
      GF2Elt u = random_elt(f, rng);
      GF2Elt s = u.pow(static_cast<std::uint64_t>(n));
      if (s.is_zero() || s == I(f, 64)) continue;
      Curve E0 = family_E0(u, n), E1 = family_E1(u, n);
      GF2Elt a = s - I(f, 16), b = s - I(f, 256);
      CHECK(E0.j_invariant() == a * a * a / s);
      CHECK(E1.j_invariant() == -(b * b * b) / (s * s));
      CHECK(E0.discriminant() == (s - I(f, 64)).pow(3) * s);
      CHECK(E1.discriminant() == -(s - I(f, 64)).pow(3) * s * s);
      Isogeny phi = two_isogeny_quotient(E0, Point::affine(zero(f), zero(f)));
      CHECK(phi.degree == 2);
      CHECK(isomorphic(phi.codomain, E1));
    }
  }
  for (int i = 0; i < 10; ++i) {
    GF2Elt s = random_elt(f, rng);
    Curve C0 = family_C(s, FamilyC::C0), C1 = family_C(s, FamilyC::C1);
    GF2Elt q = s * s + s + one(f), r = s * s + I(f, 16) * s + I(f, 16);
    CHECK(C0.j_invariant() == I(f, 256) * q.pow(3) / (s * s * (s + one(f)).pow(2)));
    CHECK(C1.j_invariant() == I(f, 16) * r.pow(3) / (s.pow(4) * (s + one(f))));
    CHECK(C0.discriminant() == I(f, 16) * s * s * (s + one(f)).pow(2));
    CHECK(C1.discriminant() == I(f, 256) * s.pow(4) * (s + one(f)));
    CHECK(isomorphic(velu(C1, GFPoly::linear(zero(f))).codomain, C0));
  }
  CHECK_THROWS_AS(family_E0(I(f, 2), 6), SingularParameter);
  CHECK_THROWS_AS(family_C(I(f, -1), FamilyC::C1), SingularParameter);
}

TEST_CASE("isomorphism test separates quadratic twists") {
  GF2Field f = make_field(1009);
  std::mt19937_64 rng(5);
  Curve E = Curve::from_a2a4a6(zero(f), I(f, 3), I(f, 7));
  for (int i = 0; i < 20; ++i) {
    GF2Elt d = random_elt(f, rng);
    if (d.is_zero()) continue;
    Curve T = Curve::from_a2a4a6(zero(f), E.a4 * d * d, E.a6 * d * d * d);
    CHECK(isomorphic(E, T) == is_square(d));
    CHECK(twist_factor(E, T).value() == d);
  }
}

TEST_CASE("velu isogenies are homomorphisms with the right kernel") {
  GF2Field f = make_field(103);
  std::mt19937_64 rng(17);
  for (long ell : {2L, 3L, 5L, 7L}) {
    auto [E, Q] = curve_with_torsion(f, ell, rng);
    Isogeny phi = velu(E, kernel_poly(E, Q, ell));
    CHECK(phi.degree == ell);
    for (long k = 0; k < ell; ++k) CHECK(phi.apply(E.mul(k, Q)).is_identity());
    check_homomorphism(phi, rng);
    // Classical modular relation between the j-invariants.
    if (ell <= 5) CHECK(evaluate(classical(static_cast<int>(ell)), E.j_invariant(), phi.codomain.j_invariant()).is_zero());
  }
}

TEST_CASE("velu with non-cyclic kernels") {
  GF2Field f = make_field(103);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 5; ++i) {
    Curve E = Curve::from_a2a4a6(random_elt(f, rng), random_elt(f, rng), random_elt(f, rng));
    // E[2] and E[3] as kernels: multiplication maps up to isomorphism.
    Isogeny two = velu(E, E.cubic());
    CHECK(two.degree == 4);
    CHECK(two.codomain.j_invariant() == E.j_invariant());
    Isogeny three = velu(E, E.division_poly(3).monic());
    CHECK(three.degree == 9);
    CHECK(three.codomain.j_invariant() == E.j_invariant());
    check_homomorphism(three, rng);
  }
}

TEST_CASE("velu rejects non-subgroups") {
  GF2Field f = make_field(103);
  std::mt19937_64 rng(29);
  Curve E = Curve::from_a2a4a6(I(f, 1), I(f, 2), I(f, 3));
  int rejected = 0;
  for (int i = 0; i < 20; ++i) {
    GFPoly h(f, {random_elt(f, rng), random_elt(f, rng), one(f)});
    try {
      velu(E, h);
    } catch (const KernelError&) {
      ++rejected;
    }
  }
  CHECK(rejected == 20);
  // Two of the three 2-torsion points.
  GFPoly F = E.cubic();
  auto rs = roots(F);
  if (rs.size() == 3) {
    GFPoly h = GFPoly::linear(rs[0].value) * GFPoly::linear(rs[1].value);
    CHECK_THROWS_AS(velu(E, h), KernelError);
  }
  CHECK_THROWS_AS(velu(E, GFPoly(f, {one(f)})), KernelError);
}
