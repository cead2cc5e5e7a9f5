#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace weber {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Exact element of Q(zeta_48), stored as sum_{i<16} c_i z^i with z = zeta_48
/// and reduced modulo the 48th cyclotomic polynomial z^16 - z^8 + 1.
class CycloElt {
 public:
  static constexpr int kDegree = 16;
  static constexpr int kOrder = 48;

  CycloElt() = default;
  CycloElt(long v) { coeffs_[0] = v; }  // NOLINT(google-explicit-constructor)
  CycloElt(const Rational& v) { coeffs_[0] = v; }  // NOLINT
  CycloElt(const Integer& v) { coeffs_[0] = v; }   // NOLINT

  /// z^e for any integer exponent e.
  static CycloElt zeta_power(long e);
  static CycloElt from_coeffs(const std::array<Rational, kDegree>& c);

  const Rational& coeff(int i) const { return coeffs_[i]; }
  const std::array<Rational, kDegree>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// True when every coefficient of z^i, i > 0, vanishes.
  bool is_rational() const;
  /// Constant coefficient; only meaningful when is_rational().
  const Rational& rational() const { return coeffs_[0]; }

  CycloElt& operator+=(const CycloElt& o);
  CycloElt& operator-=(const CycloElt& o);
  CycloElt& operator*=(const CycloElt& o);
  CycloElt& operator/=(const CycloElt& o);

  friend CycloElt operator+(CycloElt a, const CycloElt& b) { return a += b; }
  friend CycloElt operator-(CycloElt a, const CycloElt& b) { return a -= b; }
  friend CycloElt operator*(const CycloElt& a, const CycloElt& b);
  friend CycloElt operator/(CycloElt a, const CycloElt& b) { return a /= b; }
  CycloElt operator-() const;

  friend bool operator==(const CycloElt& a, const CycloElt& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const CycloElt& a, const CycloElt& b) { return !(a == b); }

  /// Multiplicative inverse; throws DomainError on zero.
  CycloElt inverse() const;
  CycloElt pow(long e) const;
  CycloElt scaled(const Rational& r) const;

  /// Canonical text "c0 + c1*z + ... + c15*z^15" listing nonzero terms only,
  /// "0" for zero, a bare rational when the element is rational.
  std::string to_string() const;
  static CycloElt parse(std::string_view text);

 private:
  std::array<Rational, kDegree> coeffs_{};
};

/// zeta_m^k embedded as zeta_48^{(48/m) k}; requires m | 48.
CycloElt root_of_unity(int m, long k);
/// zeta_8 + zeta_8^{-1}.
CycloElt sqrt2();

}  // namespace weber
