#include "weber/models.hpp"

#include <array>

#include "weber/error.hpp"

namespace weber {

namespace {

GF2Elt I(const GF2Field& f, long v) { return GF2Elt::from_int(f, v); }

void check_n(int n) {
  if (n != 1 && n != 2 && n != 4 && n != 8) throw DomainError("model index n must divide 8");
}

void check_arity(const ProjPoint& P, std::size_t k) {
  if (P.size() != k) throw DomainError("expected " + std::to_string(k) + " coordinates, got " + std::to_string(P.size()));
}

bool all_zero(const ProjPoint& P) {
  for (const auto& x : P)
    if (!x.is_zero()) return false;
  return true;
}

GF2Elt pw(const GF2Elt& x, int e) { return x.pow(static_cast<std::uint64_t>(e)); }

// Preimage under F_n -> W_n by cube roots, for the finitely many points
// where the displayed W_n -> F_n formulas all vanish. With s_a = 1 for the
// first nonzero w_a, s_i^3 = w_i / w_a and s0 s1 s2 = k w3 / w_a.
std::optional<ProjPoint> invert_by_cube_roots(const GF2Field& f, int n, const ProjPoint& w) {
  std::size_t a = 0;
  while (a < 3 && w[a].is_zero()) ++a;
  if (a == 3) return std::nullopt;
  const GF2Elt inv = w[a].inverse();
  const GF2Elt k = pw(sqrt2(f), 8 / n);
  std::vector<std::vector<GF2Elt>> cands(3);
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == a) {
      cands[i] = {one(f)};
    } else if (w[i].is_zero()) {
      cands[i] = {zero(f)};
    } else {
      for (const auto& r : roots(GFPoly(f, {-(w[i] * inv), zero(f), zero(f), one(f)}))) cands[i].push_back(r.value);
    }
  }
  for (const auto& s0 : cands[0])
    for (const auto& s1 : cands[1])
      for (const auto& s2 : cands[2]) {
        ProjPoint s{s0, s1, s2};
        if (s0 * s1 * s2 == k * w[3] * inv && on_model(f, {n, ModelSpec::Kind::Fermat}, s)) return s;
      }
  return std::nullopt;
}

}  // namespace

bool proj_equal(const ProjPoint& a, const ProjPoint& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return !all_zero(a) && !all_zero(b);
}

ProjPoint proj_normalize(const ProjPoint& P) {
  for (const auto& x : P) {
    if (x.is_zero()) continue;
    GF2Elt inv = x.inverse();
    ProjPoint out;
    for (const auto& y : P) out.push_back(y * inv);
    return out;
  }
  throw DomainError("zero vector is not a projective point");
}

GF2Elt sqrt2(const GF2Field& f) { return *sqrt(I(f, 2)); }
GF2Elt sqrt8(const GF2Field& f) { return I(f, 2) * sqrt2(f); }

bool on_model(const GF2Field& f, const ModelSpec& spec, const ProjPoint& P) {
  check_n(spec.n);
  const int n = spec.n, m = 8 / n;
  if (spec.kind == ModelSpec::Kind::Fermat) {
    check_arity(P, 3);
    if (all_zero(P)) return false;
    return (pw(P[0], n) + pw(P[1], n) + pw(P[2], n)).is_zero();
  }
  check_arity(P, 4);
  if (all_zero(P)) return false;
  GF2Elt sum = pw(P[0], n) + pw(P[1], n) + pw(P[2], n);
  GF2Elt prod = P[0] * P[1] * P[2];
  GF2Elt cube = pw(P[3], 3);
  if (spec.kind == ModelSpec::Kind::Weber3n) return sum.is_zero() && prod == pw(sqrt2(f), m) * cube;
  return sum == I(f, 48) * pw(P[3], n) && prod == pw(sqrt8(f), m) * cube;
}

bool weber_singular(const GF2Field& f, int n, const ProjPoint& P) {
  check_n(n);
  check_arity(P, 4);
  const GF2Elt nn = I(f, n);
  std::array<GF2Elt, 4> g1 = {nn * pw(P[0], n - 1), nn * pw(P[1], n - 1), nn * pw(P[2], n - 1),
                              -(I(f, 48) * nn * pw(P[3], n - 1))};
  std::array<GF2Elt, 4> g2 = {P[1] * P[2], P[0] * P[2], P[0] * P[1], -(I(f, 3) * pw(sqrt8(f), 8 / n) * P[3] * P[3])};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (g1[i] * g2[j] != g1[j] * g2[i]) return false;
  return true;
}

std::optional<ProjPoint> weber_to_fermat_chart(const GF2Field& f, int chart, const ProjPoint& P) {
  check_arity(P, 4);
  const GF2Elt &u0 = P[0], &u1 = P[1], &u2 = P[2], &u3 = P[3];
  const GF2Elt four = I(f, 4), sixteen = I(f, 16);
  ProjPoint out;
  switch (chart) {
    case 0:
      out = {-(u0 * u0) + sixteen * u3 * u3, u0 * u1 - four * u2 * u3, u0 * u2 - four * u1 * u3};
      break;
    case 1:
      out = {u0 * u1 - four * u2 * u3, -(u1 * u1) + sixteen * u3 * u3, u1 * u2 - four * u0 * u3};
      break;
    case 2:
      out = {u0 * u2 - four * u1 * u3, u1 * u2 - four * u0 * u3, -(u2 * u2) + sixteen * u3 * u3};
      break;
    default:
      throw DomainError("chart must be 0, 1 or 2");
  }
  if (all_zero(out)) return std::nullopt;
  return out;
}

ProjPoint weber_to_fermat(const GF2Field& f, int n, const ProjPoint& P) {
  check_n(n);
  if (!on_model(f, {n, ModelSpec::Kind::Weber}, P)) throw DomainError("point is not on the Weber model W_" + std::to_string(n));
  const GF2Elt &u0 = P[0], &u1 = P[1], &u2 = P[2], &u3 = P[3];
  ProjPoint out;
  switch (n) {
    case 1: {
      GF2Elt s = I(f, 16) * u3;
      out = {u0 - s, u1 - s, u2 - s};
      break;
    }
    case 2:
      for (int chart = 0; chart < 3; ++chart)
        if (auto img = weber_to_fermat_chart(f, chart, P)) return *img;
      if (auto s = invert_by_cube_roots(f, n, P)) return *s;
      throw ChartError("every chart of W_2 -> F_2 vanishes at this point");
    case 4: {
      GF2Elt two = I(f, 2);
      out = {pw(u0, 3) - two * u1 * u2 * u3, pw(u1, 3) - two * u0 * u2 * u3, pw(u2, 3) - two * u0 * u1 * u3};
      break;
    }
    case 8: {
      GF2Elt r2 = sqrt2(f);
      out = {r2 * pw(u2, 5) * u3 - pw(u0, 3) * pw(u1, 3), pw(u1, 6) - I(f, 2) * pw(u0 * u2 * u3, 2),
             r2 * pw(u0, 5) * u3 - pw(u1, 3) * pw(u2, 3)};
      break;
    }
  }
  if (all_zero(out)) {
    if (auto s = invert_by_cube_roots(f, n, P)) return *s;
    throw ChartError("image vanishes identically at this point");
  }
  return out;
}

ProjPoint fermat_to_weber(const GF2Field& f, int n, const ProjPoint& P) {
  check_n(n);
  if (!on_model(f, {n, ModelSpec::Kind::Fermat}, P)) throw DomainError("point is not on the Fermat model F_" + std::to_string(n));
  GF2Elt k = pw(sqrt2(f), 8 / n);
  return {k * pw(P[0], 3), k * pw(P[1], 3), k * pw(P[2], 3), P[0] * P[1] * P[2]};
}

GF2Elt fermat_projection(int i, const ProjPoint& P) {
  check_arity(P, 3);
  const GF2Elt *num, *den;
  switch (i) {
    case 0: num = &P[1]; den = &P[2]; break;
    case 1: num = &P[0]; den = &P[2]; break;
    case 2: num = &P[0]; den = &P[1]; break;
    default: throw DomainError("projection index must be 0, 1 or 2");
  }
  if (den->is_zero()) throw ChartError("projection denominator vanishes");
  return *num / *den;
}

ProjPoint random_fermat_point(const GF2Field& f, int n, std::mt19937_64& rng) {
  check_n(n);
  for (;;) {
    GF2Elt x(f, rng() % f.p, rng() % f.p), y(f, rng() % f.p, rng() % f.p);
    // z^n = -(x^n + y^n)
    GFPoly g = GFPoly::monomial(f, static_cast<std::size_t>(n), one(f)) + GFPoly(f, {pw(x, n) + pw(y, n)});
    auto rs = roots(g);
    if (rs.empty()) continue;
    return {x, y, rs[rng() % rs.size()].value};
  }
}

ProjPoint random_weber_point(const GF2Field& f, int n, std::mt19937_64& rng) {
  check_n(n);
  const GF2Elt k = pw(sqrt8(f), 8 / n);
  for (;;) {
    GF2Elt x0(f, rng() % f.p, rng() % f.p);
    if (x0.is_zero()) continue;
    // With X3 = 1 and c = k / x0: X1 X2 = c, X1^n + X2^n = 48 - x0^n,
    // so X1^(2n) - r X1^n + c^n = 0.
    GF2Elt c = k / x0, r = I(f, 48) - pw(x0, n);
    std::vector<GF2Elt> coeffs(static_cast<std::size_t>(2 * n + 1), zero(f));
    coeffs[0] = pw(c, n);
    coeffs[static_cast<std::size_t>(n)] = -r;
    coeffs[static_cast<std::size_t>(2 * n)] = one(f);
    auto rs = roots(GFPoly(f, coeffs));
    if (rs.empty()) continue;
    GF2Elt x1 = rs[rng() % rs.size()].value;
    return {x0, x1, c / x1, one(f)};
  }
}

}  // namespace weber
