#pragma once

#include <optional>
#include <random>
#include <vector>

#include "weber/gf.hpp"

namespace weber {

/// Homogeneous coordinates; equality is up to a nonzero scalar.
using ProjPoint = std::vector<GF2Elt>;

bool proj_equal(const ProjPoint& a, const ProjPoint& b);
/// Scale so that the first nonzero coordinate is 1.
ProjPoint proj_normalize(const ProjPoint& P);

/// Weber:   X0^n + X1^n + X2^n = 48 X3^n,  X0 X1 X2 = sqrt8^m X3^3   (m = 8/n)
/// Weber3n: X0^n + X1^n + X2^n = 0,        X0 X1 X2 = sqrt2^m X3^3
/// Fermat:  X^n + Y^n + Z^n = 0
struct ModelSpec {
  enum class Kind { Weber, Weber3n, Fermat };
  int n = 1;  // divisor of 8
  Kind kind = Kind::Weber;
};

/// Canonical sqrt(2); sqrt(8) is taken as 2*sqrt(2) so the model
/// identities stay consistent with one sign choice.
GF2Elt sqrt2(const GF2Field& f);
GF2Elt sqrt8(const GF2Field& f);

/// Throws DomainError on wrong arity or n not dividing 8.
bool on_model(const GF2Field& f, const ModelSpec& spec, const ProjPoint& P);

/// Rank of the Jacobian of the two W_n equations drops below 2. At such
/// points F_n -> W_n is not injective and the W_n -> F_n formulas vanish.
bool weber_singular(const GF2Field& f, int n, const ProjPoint& P);

/// W_n -> F_n. DomainError if P is off the Weber model; ChartError if every
/// chart vanishes (n = 2) or the image is the zero vector.
ProjPoint weber_to_fermat(const GF2Field& f, int n, const ProjPoint& P);
/// The n = 2 charts individually (chart in {0,1,2}); nullopt where zero.
std::optional<ProjPoint> weber_to_fermat_chart(const GF2Field& f, int chart, const ProjPoint& P);
/// F_n -> W_n: (k s0^3 : k s1^3 : k s2^3 : s0 s1 s2) with k = sqrt2^(8/n).
ProjPoint fermat_to_weber(const GF2Field& f, int n, const ProjPoint& P);

/// pi_0 = Y/Z, pi_1 = X/Z, pi_2 = X/Y. ChartError on zero denominator.
GF2Elt fermat_projection(int i, const ProjPoint& P);

/// Random affine-chart points, found by solving for the last free
/// coordinate with roots().
ProjPoint random_fermat_point(const GF2Field& f, int n, std::mt19937_64& rng);
ProjPoint random_weber_point(const GF2Field& f, int n, std::mt19937_64& rng);

}  // namespace weber
