#include "weber/reduction.hpp"

#include <vector>

namespace weber {

namespace {

GF2Elt reduce_coeff(const GF2Field& f, const CycloElt& c) {
  if (c.is_rational()) return GF2Elt::from_rational(f, c.coeff(0));
  return reduce_cyclo(f, c);
}

GFPoly specialize(const BiPoly& P, const GF2Elt& v, bool fix_x) {
  const GF2Field f = v.field();
  int deg = fix_x ? P.degree_y() : P.degree_x();
  std::vector<GF2Elt> out(static_cast<std::size_t>(deg + 1), zero(f));
  for (const auto& [key, c] : P.terms()) {
    auto [i, j] = key;
    int fixed = fix_x ? i : j, free = fix_x ? j : i;
    out[static_cast<std::size_t>(free)] += reduce_coeff(f, c) * v.pow(static_cast<std::uint64_t>(fixed));
  }
  return GFPoly(f, std::move(out));
}

}  // namespace

GFPoly specialize_x(const BiPoly& P, const GF2Elt& x0) { return specialize(P, x0, true); }
GFPoly specialize_y(const BiPoly& P, const GF2Elt& y0) { return specialize(P, y0, false); }

GF2Elt evaluate(const BiPoly& P, const GF2Elt& x0, const GF2Elt& y0) { return specialize_x(P, x0).eval(y0); }

GF2Elt eval_int_poly(const IntPoly& c, const GF2Elt& x) {
  const GF2Field f = x.field();
  GF2Elt acc = zero(f);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + GF2Elt::from_integer(f, *it);
  return acc;
}

}  // namespace weber
