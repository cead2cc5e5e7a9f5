#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weber/exactnum.hpp"

namespace weber {

/// F_{p^2} = F_p[u] / (u^2 - d), with d the smallest positive nonresidue.
struct GF2Field {
  std::uint64_t p = 0;
  std::uint64_t d = 0;

  std::string header() const;  // "p=<p> d=<d>"
  friend bool operator==(const GF2Field& x, const GF2Field& y) { return x.p == y.p && x.d == y.d; }
};

/// Requires an odd prime p < 2^31; throws DomainError otherwise.
GF2Field make_field(std::uint64_t p);

/// a + b*u in F_{p^2}. Elements carry their field parameters by value.
class GF2Elt {
 public:
  GF2Elt() = default;
  GF2Elt(const GF2Field& f, std::uint64_t a, std::uint64_t b = 0);
  /// Reduce a signed integer into the prime field.
  static GF2Elt from_int(const GF2Field& f, long v);
  static GF2Elt from_integer(const GF2Field& f, const Integer& v);
  /// Throws DomainError when the denominator vanishes mod p.
  static GF2Elt from_rational(const GF2Field& f, const Rational& v);

  std::uint64_t a() const { return a_; }
  std::uint64_t b() const { return b_; }
  GF2Field field() const { return {p_, d_}; }
  std::uint64_t p() const { return p_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }
  bool in_prime_field() const { return b_ == 0; }

  GF2Elt operator+(const GF2Elt& o) const;
  GF2Elt operator-(const GF2Elt& o) const;
  GF2Elt operator*(const GF2Elt& o) const;
  GF2Elt operator/(const GF2Elt& o) const;
  GF2Elt operator-() const;
  GF2Elt& operator+=(const GF2Elt& o) { return *this = *this + o; }
  GF2Elt& operator-=(const GF2Elt& o) { return *this = *this - o; }
  GF2Elt& operator*=(const GF2Elt& o) { return *this = *this * o; }
  GF2Elt& operator/=(const GF2Elt& o) { return *this = *this / o; }

  /// Throws DomainError on zero.
  GF2Elt inverse() const;
  GF2Elt pow(std::uint64_t e) const;
  GF2Elt pow_signed(long e) const;
  GF2Elt frobenius() const;  // a - b*u

  friend bool operator==(const GF2Elt& x, const GF2Elt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.p_ == y.p_;
  }
  friend bool operator!=(const GF2Elt& x, const GF2Elt& y) { return !(x == y); }
  /// Canonical order: by a, then by b.
  friend bool operator<(const GF2Elt& x, const GF2Elt& y) {
    return x.a_ != y.a_ ? x.a_ < y.a_ : x.b_ < y.b_;
  }

  /// "a+b*u" in decimal.
  std::string encode() const;
  static GF2Elt decode(const GF2Field& f, std::string_view text);

 private:
  std::uint64_t a_ = 0, b_ = 0, p_ = 0, d_ = 0;
};

GF2Elt zero(const GF2Field& f);
GF2Elt one(const GF2Field& f);

/// x^((q-1)/2) == 1 or x == 0, q = p^2.
bool is_square(const GF2Elt& x);
/// Square root with the lexicographically smallest (a, b) of the two roots.
std::optional<GF2Elt> sqrt(const GF2Elt& x);
/// Canonical element of exact order n; requires n | p^2 - 1.
GF2Elt nth_root_of_unity(const GF2Field& f, std::uint64_t n);
/// Image of an element of Q(zeta_48) with zeta_48 -> nth_root_of_unity(f, 48).
GF2Elt reduce_cyclo(const GF2Field& f, const CycloElt& c);

/// Dense univariate polynomial over F_{p^2}, coefficient of x^i at index i.
class GFPoly {
 public:
  GFPoly() = default;
  explicit GFPoly(const GF2Field& f) : field_(f) {}
  GFPoly(const GF2Field& f, std::vector<GF2Elt> coeffs);
  static GFPoly monomial(const GF2Field& f, std::size_t deg, const GF2Elt& c);
  /// x - r
  static GFPoly linear(const GF2Elt& r);

  const GF2Field& field() const { return field_; }
  const std::vector<GF2Elt>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  GF2Elt coeff(std::size_t i) const;
  const GF2Elt& leading() const { return c_.back(); }

  GFPoly operator+(const GFPoly& o) const;
  GFPoly operator-(const GFPoly& o) const;
  GFPoly operator*(const GFPoly& o) const;
  GFPoly operator*(const GF2Elt& c) const;
  friend bool operator==(const GFPoly& x, const GFPoly& y) { return x.c_ == y.c_; }

  /// Quotient and remainder; throws DomainError on division by zero.
  std::pair<GFPoly, GFPoly> divmod(const GFPoly& o) const;
  GFPoly operator%(const GFPoly& o) const { return divmod(o).second; }
  GFPoly operator/(const GFPoly& o) const { return divmod(o).first; }
  GFPoly monic() const;
  GFPoly derivative() const;
  GF2Elt eval(const GF2Elt& x) const;
  /// Composition with a polynomial: self(g).
  GFPoly compose(const GFPoly& g) const;

  std::string to_string() const;

 private:
  void trim();
  GF2Field field_;
  std::vector<GF2Elt> c_;
};

GFPoly gcd(GFPoly a, GFPoly b);
/// base^e mod m.
GFPoly powmod(const GFPoly& base, std::uint64_t e, const GFPoly& m);

struct Root {
  GF2Elt value;
  int multiplicity;
};

/// All roots in F_{p^2} with multiplicity, sorted canonically. Deterministic.
std::vector<Root> roots(const GFPoly& f);
/// Number of distinct roots in F_{p^2}: deg gcd(f, x^(p^2) - x).
int split_count(const GFPoly& f);

}  // namespace weber
