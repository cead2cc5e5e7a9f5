#pragma once

#include <array>
#include <optional>
#include <random>
#include <utility>

#include "weber/curves.hpp"

namespace weber {

enum class ChainVariant { Standard, Twisted };

/// A three-step 2-isogeny chain C0 -> C1 -> C2 -> C3, each step the quotient
/// by (0,0), built from a seed t3 with t_{k-1} = t_k^2.
struct ChainWitness {
  ChainVariant variant = ChainVariant::Standard;
  GF2Elt t3, t2, t1, t0;
  GF2Elt c0, e0, c1, e1, c2;
  GF2Elt c3;      // standard only
  GF2Elt e2, u3;  // twisted only, u3^2 = 8 e0
  std::array<Curve, 4> curves;
  std::array<Isogeny, 3> isogenies;  // explicit maps; phi_y = y * phi_x'
  std::array<Point, 2> torsion;      // T0, T1 with 2T = (0,0) and phi(T) = (0,0)
};

/// Builds and checks the chain. Throws DegenerateSeed when a constant or a
/// discriminant vanishes, NeedsExtension when 8 e0 has no square root in
/// F_{p^2} (twisted variant), InternalError if a chain identity fails.
ChainWitness build_chain(const GF2Field& f, const GF2Elt& t3, ChainVariant variant);

/// (t0, e0^2/4c0, e1^2/4c1, e2^2/4c2); twisted witnesses only.
std::array<GF2Elt, 4> legendre_sequence(const ChainWitness& w);
/// lam1 (lam1 - 1) == (lam0 - 1)^2 / (16 lam0). DegenerateSeed if lam0 = 0.
bool legendre_step_holds(const GF2Elt& lam0, const GF2Elt& lam1);

/// (zeta8^i1 s3, zeta8^i2 t3).
std::pair<GF2Elt, GF2Elt> twist_chain_seed(const GF2Elt& s3, const GF2Elt& t3, long i1, long i2);

/// Composite x-map of phi2 o phi1 o phi0 as num/den in lowest terms.
std::pair<GFPoly, GFPoly> composite_x_map(const ChainWitness& w);
/// Degree of the composite map and the number of distinct x-coordinates of
/// nonzero kernel points (roots of the composite denominator).
struct CompositeDegree {
  int degree;
  int kernel_x_count;
};
CompositeDegree composite_degree(const ChainWitness& w);
/// Compares the composite x-map with stepwise evaluation on random points.
bool composite_agrees(const ChainWitness& w, std::mt19937_64& rng, int samples = 20);

}  // namespace weber
