#include "doctest.h"
#include "weber/error.hpp"
#include "weber/qseries.hpp"

using namespace weber;

namespace {

// Coefficients of prod (1 - q^n) up to q^(n-1), by direct multiplication.
std::vector<long> euler_product(int n) {
  std::vector<long> c(n, 0);
  c[0] = 1;
  for (int k = 1; k < n; ++k)
    for (int i = n - 1; i >= k; --i) c[i] -= c[i - k];
  return c;
}

void check_vanishes(const QSeries& s, long min_terms) {
  CHECK(s.is_zero());
  CHECK(s.abs_precision() >= min_terms);
}

constexpr long kPrec = 48 * 12;  // well beyond 200 series terms in q^(1/48)

}  // namespace

TEST_CASE("eta components") {
  QSeries e = eta_component(EtaVariant::Tau, 48 * 40);
  auto oracle = euler_product(40);
  CHECK(e.valuation() == 2);
  for (int n = 0; n < 40; ++n) CHECK(e.coeff(2 + 48 * n) == CycloElt(oracle[n]));
  CHECK(eta_component(EtaVariant::TwoTau, 200).valuation() == 4);
  QSeries h = eta_component(EtaVariant::TauHalf, 200);
  QSeries hp = eta_component(EtaVariant::TauPlusOneHalf, 200);
  for (long k = h.valuation(); k < h.abs_precision(); ++k)
    CHECK(hp.coeff(k) == h.coeff(k) * CycloElt::zeta_power(k));
  CHECK_THROWS_AS(e.coeff(e.abs_precision()), DomainError);
}

TEST_CASE("Weber identities") {
  QSeries f = weber_series(WeberFunction::F, kPrec);
  QSeries f1 = weber_series(WeberFunction::F1, kPrec);
  QSeries f2 = weber_series(WeberFunction::F2, kPrec);
  CHECK(f.valuation() == -1);
  CHECK(f1.valuation() == -1);
  CHECK(f2.valuation() == 2);
  check_vanishes(f * f1 * f2 - sqrt2(), 200);
  check_vanishes(f.pow(8) - f1.pow(8) - f2.pow(8), 200);
  QSeries eta3 = eta_component(EtaVariant::Tau, kPrec).pow(3);
  QSeries trip = eta_component(EtaVariant::TauPlusOneHalf, kPrec) * eta_component(EtaVariant::TauHalf, kPrec) *
                 eta_component(EtaVariant::TwoTau, kPrec) * root_of_unity(48, -1);
  check_vanishes(trip - eta3, 200);
  check_vanishes(-(shift_tau(f, 3).pow(8)) - f1.pow(8), 200);
  CHECK(shift_tau(f, 48).coeffs() == f.coeffs());
  CHECK(shift_tau(f, 0).coeffs() == f.coeffs());
}

TEST_CASE("j relations") {
  QSeries j = j_series(kPrec);
  CHECK(j.valuation() == -48);
  CHECK(j.coeff(0) == CycloElt(744L));
  CHECK(j.coeff(48) == CycloElt(196884L));
  QSeries f24 = weber_series(WeberFunction::F, kPrec).pow(24);
  QSeries f124 = weber_series(WeberFunction::F1, kPrec).pow(24);
  QSeries f224 = weber_series(WeberFunction::F2, kPrec).pow(24);
  check_vanishes((f24 - CycloElt(16L)).pow(3) / f24 - j, 200);
  check_vanishes((f124 + CycloElt(16L)).pow(3) / f124 - j, 200);
  check_vanishes((f224 + CycloElt(16L)).pow(3) / f224 - j, 200);
}

TEST_CASE("normalized triple roots") {
  QSeries j = j_series(kPrec);
  for (auto w : {WeberFunction::U0, WeberFunction::U1, WeberFunction::U2}) {
    for (long k : {0L, 5L, 17L}) {
      QSeries x = weber_series(w, kPrec) * root_of_unity(24, k);
      QSeries x24 = x.pow(24);
      check_vanishes((x24 - CycloElt(16L)).pow(3) - j * x24, 200);
    }
  }
}

TEST_CASE("line series satisfy their j relations") {
  QSeries j = j_series(kPrec);
  for (const auto& line : registered_lines()) {
    CAPTURE(line.name);
    QSeries s = line_series(line, kPrec);
    check_vanishes(apply_j_map(line, s) - j, 150);
  }
  CHECK(substitute_qpower(weber_series(WeberFunction::F, 100), 5).valuation() == -5);
  CHECK_THROWS_AS(line_by_name("nope"), DomainError);
}

TEST_CASE("t line via -f^8") {
  QSeries t = -weber_series(WeberFunction::F, kPrec).pow(8);
  QSeries t3 = t.pow(3);
  check_vanishes((t3 + CycloElt(16L)).pow(3) / t3 - j_series(kPrec), 200);
}
