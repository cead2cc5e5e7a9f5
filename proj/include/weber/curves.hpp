#pragma once

#include <optional>
#include <random>

#include "weber/gf.hpp"

namespace weber {

/// Projective point (X:Y:Z), stored normalized: Z is 1, or the point is
/// the identity (0:1:0).
struct Point {
  GF2Elt X, Y, Z;

  static Point identity(const GF2Field& f) { return {zero(f), one(f), zero(f)}; }
  static Point affine(const GF2Elt& x, const GF2Elt& y) { return {x, y, one(x.field())}; }
  bool is_identity() const { return Z.is_zero(); }
  const GF2Elt& x() const { return X; }
  const GF2Elt& y() const { return Y; }
  friend bool operator==(const Point& a, const Point& b) {
    if (a.is_identity() || b.is_identity()) return a.is_identity() == b.is_identity();
    return a.X == b.X && a.Y == b.Y;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_{p^2}.
class Curve {
 public:
  Curve() = default;
  /// Throws SingularParameter when the discriminant vanishes.
  Curve(const GF2Elt& a1, const GF2Elt& a2, const GF2Elt& a3, const GF2Elt& a4, const GF2Elt& a6);
  /// Short form with a1 = a3 = 0.
  static Curve from_a2a4a6(const GF2Elt& a2, const GF2Elt& a4, const GF2Elt& a6);

  const GF2Field& field() const { return field_; }
  GF2Elt a1, a2, a3, a4, a6;

  GF2Elt b2() const;
  GF2Elt b4() const;
  GF2Elt b6() const;
  GF2Elt b8() const;
  GF2Elt c4() const;
  GF2Elt c6() const;
  GF2Elt discriminant() const;
  GF2Elt j_invariant() const;
  bool short_form() const { return a1.is_zero() && a3.is_zero(); }

  bool contains(const Point& P) const;
  Point negate(const Point& P) const;
  Point add(const Point& P, const Point& Q) const;
  Point dbl(const Point& P) const { return add(P, P); }
  Point mul(long k, const Point& P) const;
  /// Uniform-ish random affine point (resamples x until y exists).
  Point random_point(std::mt19937_64& rng) const;
  /// Cubic x^3 + a2 x^2 + a4 x + a6 (short form only).
  GFPoly cubic() const;
  /// Division polynomial psi_n with the factor 2y removed for even n.
  GFPoly division_poly(int n) const;

 private:
  GF2Field field_;
};

/// Curves are isomorphic over F_{p^2} (j equal and twist factor a square).
bool isomorphic(const Curve& a, const Curve& b);
/// For equal j outside {0, 1728}: u^2 with c4(b) = u^4 c4(a), c6(b) = u^6 c6(a).
std::optional<GF2Elt> twist_factor(const Curve& a, const Curve& b);

/// Separable isogeny from a short-form curve, normalized so that
/// phi_x = num/den and phi_y = y * d(phi_x)/dx.
struct Isogeny {
  Curve domain;
  Curve codomain;
  GFPoly kernel_polynomial;
  GFPoly x_num;
  GFPoly x_den;
  int degree = 0;

  Point apply(const Point& P) const;
};

/// y^2 = x(x^2 - ((u^n - 64)/4) x - (u^n - 64)).
Curve family_E0(const GF2Elt& u, int n);
/// y^2 = x(x^2 + ((u^n - 64)/2) x + ((u^n - 64)/16) u^n).
Curve family_E1(const GF2Elt& u, int n);
enum class FamilyC { C0, C1 };
/// C0: y^2 = x(x - 1)(x + s);  C1: y^2 = x((x + s)^2 + 4x).
Curve family_C(const GF2Elt& s, FamilyC which);

/// Quotient by the subgroup {O, T}; T must be a nontrivial 2-torsion point.
Isogeny two_isogeny_quotient(const Curve& E, const Point& T);
/// Isogeny with kernel cut out by h (monic). Supports kernels of odd order,
/// a 2-torsion point, full 2-torsion, and products of these. Throws
/// KernelError when the roots of h do not form a subgroup (up to sign).
Isogeny velu(const Curve& E, const GFPoly& h);

}  // namespace weber
