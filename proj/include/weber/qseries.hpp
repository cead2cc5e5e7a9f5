#pragma once

#include <string>
#include <vector>

#include "weber/exactnum.hpp"
#include "weber/lines.hpp"

namespace weber {

/// Truncated Laurent series in q^(1/48) with coefficients in Q(zeta_48).
///
/// Exponents are integers e standing for q^(e/48). A series stores the
/// coefficients of e in [valuation, valuation + precision); everything at
/// or beyond abs_precision() is unknown and is never read. A series that is
/// zero to its precision has no stored terms and valuation == abs_precision.
class QSeries {
 public:
  QSeries() = default;

  /// Series with coefficient `coeffs[k]` at exponent `valuation + k`,
  /// known to relative precision coeffs.size(). Leading zeros are stripped.
  static QSeries from_terms(long valuation, std::vector<CycloElt> coeffs);
  /// O(q^(abs_precision/48)).
  static QSeries zero(long abs_precision);
  static QSeries constant(const CycloElt& c, long precision);

  long valuation() const { return valuation_; }
  long precision() const { return static_cast<long>(coeffs_.size()); }
  long abs_precision() const { return valuation_ + precision(); }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of q^(e/48); throws DomainError for e >= abs_precision().
  CycloElt coeff(long e) const;
  const std::vector<CycloElt>& coeffs() const { return coeffs_; }
  const CycloElt& leading() const;
  /// True when every stored coefficient is rational.
  bool is_rational() const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator/(const QSeries& a, const QSeries& b);
  QSeries operator*(const CycloElt& c) const;
  QSeries operator+(const CycloElt& c) const;
  QSeries operator-(const CycloElt& c) const { return *this + (-c); }

  /// Requires a nonzero series (i.e. a nonzero leading coefficient).
  QSeries inverse() const;
  QSeries pow(long k) const;
  QSeries truncated(long abs_precision) const;

  /// Debug dump: one line "e c" per nonzero term.
  std::string dump() const;

 private:
  void normalize();

  long valuation_ = 0;
  std::vector<CycloElt> coeffs_;
};

enum class EtaVariant { Tau, TauHalf, TauPlusOneHalf, TwoTau };
enum class WeberFunction { F, F1, F2, U0, U1, U2 };

/// eta at the indicated argument, truncated to `prec` steps of q^(1/48).
QSeries eta_component(EtaVariant variant, long prec);
QSeries weber_series(WeberFunction which, long prec);
/// j = E4^3 / Delta, relative precision `prec`.
QSeries j_series(long prec);
/// tau -> tau + k.
QSeries shift_tau(const QSeries& s, long k);
/// q -> q^ell.
QSeries substitute_qpower(const QSeries& s, long ell);
/// The coordinate of `line` as a q-series with relative precision `prec`.
QSeries line_series(const InvariantLine& line, long prec);
/// J_line(s) as a series: numerator(s) / denominator(s).
QSeries apply_j_map(const InvariantLine& line, const QSeries& s);

}  // namespace weber
