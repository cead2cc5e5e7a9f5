#include "weber/qseries.hpp"

#include <algorithm>
#include <sstream>

#include "weber/error.hpp"

namespace weber {

QSeries QSeries::from_terms(long valuation, std::vector<CycloElt> coeffs) {
  QSeries s;
  s.valuation_ = valuation;
  s.coeffs_ = std::move(coeffs);
  s.normalize();
  return s;
}

QSeries QSeries::zero(long abs_precision) {
  QSeries s;
  s.valuation_ = abs_precision;
  return s;
}

QSeries QSeries::constant(const CycloElt& c, long precision) {
  std::vector<CycloElt> v(static_cast<std::size_t>(std::max(0L, precision)));
  if (!v.empty()) v[0] = c;
  return from_terms(0, std::move(v));
}

void QSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == 0) return;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
  valuation_ += static_cast<long>(lead);
}

CycloElt QSeries::coeff(long e) const {
  if (e >= abs_precision())
    throw DomainError("coefficient q^(" + std::to_string(e) + "/48) is beyond the series precision " +
                      std::to_string(abs_precision()));
  if (e < valuation_) return CycloElt();
  return coeffs_[static_cast<std::size_t>(e - valuation_)];
}

const CycloElt& QSeries::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of a series that is zero to precision");
  return coeffs_.front();
}

bool QSeries::is_rational() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const CycloElt& c) { return c.is_rational(); });
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

QSeries add_impl(const QSeries& a, const QSeries& b, bool subtract) {
  const long abs = std::min(a.abs_precision(), b.abs_precision());
  const long v = std::min(a.valuation(), b.valuation());
  if (v >= abs) return QSeries::zero(abs);
  std::vector<CycloElt> c(static_cast<std::size_t>(abs - v));
  for (long k = 0; k < a.precision(); ++k) {
    long e = a.valuation() + k;
    if (e >= abs) break;
    c[static_cast<std::size_t>(e - v)] = a.coeffs()[static_cast<std::size_t>(k)];
  }
  for (long k = 0; k < b.precision(); ++k) {
    long e = b.valuation() + k;
    if (e >= abs) break;
    const auto& bc = b.coeffs()[static_cast<std::size_t>(k)];
    if (bc.is_zero()) continue;
    auto& slot = c[static_cast<std::size_t>(e - v)];
    if (subtract) {
      slot -= bc;
    } else {
      slot += bc;
    }
  }
  return QSeries::from_terms(v, std::move(c));
}

std::vector<std::size_t> nonzero_positions(const std::vector<CycloElt>& c) {
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) nz.push_back(i);
  return nz;
}

}  // namespace

QSeries operator+(const QSeries& a, const QSeries& b) { return add_impl(a, b, false); }
QSeries operator-(const QSeries& a, const QSeries& b) { return add_impl(a, b, true); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  if (a.is_zero() || b.is_zero()) {
    long abs;
    if (a.is_zero() && b.is_zero()) {
      abs = a.abs_precision() + b.abs_precision();
    } else if (a.is_zero()) {
      abs = a.abs_precision() + b.valuation();
    } else {
      abs = b.abs_precision() + a.valuation();
    }
    return QSeries::zero(abs);
  }
  const std::size_t n = static_cast<std::size_t>(std::min(a.precision(), b.precision()));
  std::vector<CycloElt> c(n);
  auto nza = nonzero_positions(a.coeffs());
  auto nzb = nonzero_positions(b.coeffs());
  for (std::size_t i : nza) {
    if (i >= n) break;
    const auto& ai = a.coeffs()[i];
    for (std::size_t j : nzb) {
      if (i + j >= n) break;
      c[i + j] += ai * b.coeffs()[j];
    }
  }
  return QSeries::from_terms(a.valuation() + b.valuation(), std::move(c));
}

QSeries QSeries::operator*(const CycloElt& c) const {
  if (c.is_zero()) return zero(abs_precision());
  QSeries r = *this;
  for (auto& x : r.coeffs_)
    if (!x.is_zero()) x = x * c;
  return r;
}

QSeries QSeries::operator+(const CycloElt& c) const {
  return *this + QSeries::constant(c, abs_precision());
}

QSeries QSeries::inverse() const {
  if (is_zero()) throw DomainError("inverse of a series that is zero to precision");
  const std::size_t n = coeffs_.size();
  const CycloElt c0inv = coeffs_[0].inverse();
  auto nz = nonzero_positions(coeffs_);
  std::vector<CycloElt> w(n);
  w[0] = c0inv;
  for (std::size_t m = 1; m < n; ++m) {
    CycloElt acc;
    for (std::size_t k : nz) {
      if (k == 0) continue;
      if (k > m) break;
      if (w[m - k].is_zero()) continue;
      acc += coeffs_[k] * w[m - k];
    }
    if (!acc.is_zero()) w[m] = -(acc * c0inv);
  }
  return from_terms(-valuation_, std::move(w));
}

QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }

QSeries QSeries::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  QSeries result = constant(CycloElt(1L), precision());
  QSeries base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

QSeries QSeries::truncated(long abs) const {
  if (abs >= abs_precision()) return *this;
  if (abs <= valuation_) return zero(abs);
  std::vector<CycloElt> c(coeffs_.begin(), coeffs_.begin() + (abs - valuation_));
  return from_terms(valuation_, std::move(c));
}

std::string QSeries::dump() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    os << valuation_ + static_cast<long>(k) << ' ' << coeffs_[k].to_string() << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------

QSeries shift_tau(const QSeries& s, long k) {
  std::vector<CycloElt> c = s.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    long e = s.valuation() + static_cast<long>(i);
    c[i] = c[i] * CycloElt::zeta_power(k * e);
  }
  if (s.is_zero()) return s;
  return QSeries::from_terms(s.valuation(), std::move(c));
}

QSeries substitute_qpower(const QSeries& s, long ell) {
  if (ell < 1) throw DomainError("substitute_qpower requires ell >= 1");
  if (ell == 1) return s;
  if (s.is_zero()) return QSeries::zero(s.abs_precision() * ell);
  std::vector<CycloElt> c(static_cast<std::size_t>(s.precision() * ell));
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) c[i * static_cast<std::size_t>(ell)] = s.coeffs()[i];
  return QSeries::from_terms(s.valuation() * ell, std::move(c));
}

namespace {

// prod_{n>=1} (1 - q^n) in whole powers of q, exponents < bound.
std::vector<long> pentagonal_terms(long bound, std::vector<int>& signs) {
  std::vector<long> exps;
  for (long k = 0;; ++k) {
    bool any = false;
    for (long kk : {k, -k}) {
      if (k == 0 && kk == -k && exps.size() == 1) continue;
      long e = kk * (3 * kk - 1) / 2;
      if (e < bound) {
        exps.push_back(e);
        signs.push_back((kk % 2 == 0) ? 1 : -1);
        any = true;
      }
      if (k == 0) break;
    }
    if (!any && k > 0) break;
  }
  return exps;
}

// eta(tau) = q^(1/24) prod (1 - q^n): exponents 2 + 48m.
QSeries eta_master(long prec) {
  std::vector<CycloElt> c(static_cast<std::size_t>(std::max(prec, 1L)));
  std::vector<int> signs;
  long bound = (prec + 47) / 48;
  auto exps = pentagonal_terms(bound, signs);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    long idx = 48 * exps[i];
    if (idx < prec) c[static_cast<std::size_t>(idx)] = CycloElt(static_cast<long>(signs[i]));
  }
  return QSeries::from_terms(2, std::move(c));
}

QSeries halve_exponents(const QSeries& s) {
  if (s.valuation() % 2 != 0) throw InternalError("halve_exponents: odd valuation");
  std::vector<CycloElt> c(static_cast<std::size_t>((s.precision() + 1) / 2));
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
    if (s.coeffs()[i].is_zero()) continue;
    if (i % 2 != 0) throw InternalError("halve_exponents: odd exponent");
    c[i / 2] = s.coeffs()[i];
  }
  return QSeries::from_terms(s.valuation() / 2, std::move(c));
}

}  // namespace

QSeries eta_component(EtaVariant variant, long prec) {
  if (prec < 1) throw DomainError("eta_component requires prec >= 1");
  switch (variant) {
    case EtaVariant::Tau:
      return eta_master(prec);
    case EtaVariant::TauHalf:
      return halve_exponents(eta_master(2 * prec)).truncated(1 + prec);
    case EtaVariant::TauPlusOneHalf:
      return shift_tau(eta_component(EtaVariant::TauHalf, prec), 1);
    case EtaVariant::TwoTau:
      return substitute_qpower(eta_master((prec + 1) / 2), 2).truncated(4 + prec);
  }
  throw InternalError("unreachable eta variant");
}

QSeries weber_series(WeberFunction which, long prec) {
  if (prec < 1) throw DomainError("weber_series requires prec >= 1");
  const QSeries eta = eta_component(EtaVariant::Tau, prec);
  switch (which) {
    case WeberFunction::F:
    case WeberFunction::U0:
      return (eta_component(EtaVariant::TauPlusOneHalf, prec) / eta) * root_of_unity(48, -1);
    case WeberFunction::F1:
      return eta_component(EtaVariant::TauHalf, prec) / eta;
    case WeberFunction::F2:
      return (eta_component(EtaVariant::TwoTau, prec) / eta) * sqrt2();
    case WeberFunction::U1:
      return weber_series(WeberFunction::F1, prec) * root_of_unity(16, 1);
    case WeberFunction::U2:
      return weber_series(WeberFunction::F2, prec) * root_of_unity(16, -1);
  }
  throw InternalError("unreachable Weber function");
}

QSeries j_series(long prec) {
  if (prec < 1) throw DomainError("j_series requires prec >= 1");
  const long nq = (prec + 47) / 48;  // whole powers of q needed
  std::vector<CycloElt> e4(static_cast<std::size_t>(prec));
  e4[0] = CycloElt(1L);
  for (long n = 1; n < nq; ++n) {
    Integer sigma3 = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) sigma3 += Integer(d) * d * d;
    if (48 * n < prec) e4[static_cast<std::size_t>(48 * n)] = CycloElt(Integer(240 * sigma3));
  }
  QSeries E4 = QSeries::from_terms(0, std::move(e4));
  QSeries delta = eta_master(prec).pow(24);  // q * prod (1 - q^n)^24
  return E4.pow(3) / delta;
}

QSeries line_series(const InvariantLine& line, long prec) {
  using F = InvariantLine::Family;
  switch (line.family) {
    case F::X:
      return weber_series(WeberFunction::F, prec).pow(24 / line.n);
    case F::Y:
      return (weber_series(WeberFunction::U0, prec) / weber_series(WeberFunction::U1, prec)).pow(8 / line.n);
    case F::T:
      return weber_series(WeberFunction::F1, prec).pow(8);
    case F::R:
      return weber_series(WeberFunction::F, prec).pow(3);
    case F::J:
      return j_series(prec);
  }
  throw DomainError("unregistered line");
}

QSeries apply_j_map(const InvariantLine& line, const QSeries& s) {
  auto horner = [&](const IntPoly& p) {
    QSeries acc = QSeries::constant(CycloElt(p.back()), s.precision());
    for (auto it = p.rbegin() + 1; it != p.rend(); ++it) {
      acc = acc * s;
      if (*it != 0) acc = acc + CycloElt(*it);
    }
    return acc;
  };
  return horner(line.j_numerator) / horner(line.j_denominator);
}

}  // namespace weber
