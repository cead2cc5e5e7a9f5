#include "weber/reports.hpp"

#include "weber/qseries.hpp"

namespace weber {

namespace {

IdentityCheck zero_check(std::string name, const QSeries& diff) {
  return {std::move(name), diff.is_zero(), diff.abs_precision()};
}

}  // namespace

std::vector<IdentityCheck> qid_report(long prec) {
  QSeries f = weber_series(WeberFunction::F, prec);
  QSeries f1 = weber_series(WeberFunction::F1, prec);
  QSeries f2 = weber_series(WeberFunction::F2, prec);
  QSeries j = j_series(prec);
  std::vector<IdentityCheck> out;

  out.push_back(zero_check("f^8 = f1^8 + f2^8", f.pow(8) - f1.pow(8) - f2.pow(8)));
  out.push_back(zero_check("f*f1*f2 = sqrt2", f * f1 * f2 - sqrt2()));

  // eta((tau+1)/2) eta(tau/2) eta(2 tau) = zeta48 eta(tau)^3
  QSeries trip = eta_component(EtaVariant::TauPlusOneHalf, prec) * eta_component(EtaVariant::TauHalf, prec) *
                 eta_component(EtaVariant::TwoTau, prec) * root_of_unity(48, -1);
  out.push_back(zero_check("eta triple product", trip - eta_component(EtaVariant::Tau, prec).pow(3)));

  QSeries f24 = f.pow(24), f124 = f1.pow(24), f224 = f2.pow(24);
  const CycloElt c16(16L);
  out.push_back(zero_check("j = (f^24 - 16)^3 / f^24", (f24 - c16).pow(3) / f24 - j));
  out.push_back(zero_check("j = (f1^24 + 16)^3 / f1^24", (f124 + c16).pow(3) / f124 - j));
  out.push_back(zero_check("j = (f2^24 + 16)^3 / f2^24", (f224 + c16).pow(3) / f224 - j));
  out.push_back(zero_check("f1^8(tau) = -f(tau+3)^8", f1.pow(8) + shift_tau(f, 3).pow(8)));
  return out;
}

}  // namespace weber
