#pragma once

#include "weber/gf.hpp"
#include "weber/modpoly.hpp"

namespace weber {

/// P(x0, y) as a polynomial in y over F_{p^2}. Cyclotomic coefficients are
/// reduced with reduce_cyclo, so they need p = +-1 mod 8 unless rational.
GFPoly specialize_x(const BiPoly& P, const GF2Elt& x0);
/// P(x, y0) as a polynomial in x.
GFPoly specialize_y(const BiPoly& P, const GF2Elt& y0);
GF2Elt evaluate(const BiPoly& P, const GF2Elt& x0, const GF2Elt& y0);
/// Integer polynomial reduced mod p, evaluated at x.
GF2Elt eval_int_poly(const IntPoly& c, const GF2Elt& x);

}  // namespace weber
