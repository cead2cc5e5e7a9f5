#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weber/exactnum.hpp"

namespace weber {

/// Integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<Integer>;

/// A genus-0 invariant with its coordinate and the rational map to the j-line.
///
///   x<n>  (n | 24): u = f^(24/n),        j = (u^n - 16)^3 / u^n
///   y<n>  (n | 8) : s = (u0/u1)^(8/n),   j = 256 (s^2n + s^n + 1)^3 / (s^2n (s^n + 1)^2)
///   t             : t = f1^8,            j = (t^3 + 16)^3 / t^3
///   r             : r = f^3,             j = (r^8 - 16)^3 / r^8
///   j             : the j-invariant itself
struct InvariantLine {
  enum class Family { X, Y, T, R, J };

  std::string name;
  Family family;
  int n = 1;             // index n for x<n>/y<n>
  int cover_degree = 1;  // degree of the map to the j-line
  IntPoly j_numerator;
  IntPoly j_denominator;
  std::optional<int> sparsity_modulus;  // 24 on the f-line
  int fiber_action_order = 1;           // order of the roots-of-unity action on fibres
  std::vector<int> obstructed_primes;   // primes dividing the level

  bool obstructs(int ell) const;
  friend bool operator==(const InvariantLine& a, const InvariantLine& b) { return a.name == b.name; }
};

/// Registered lines in a fixed order.
const std::vector<InvariantLine>& registered_lines();
/// Throws DomainError for unknown names.
const InvariantLine& line_by_name(std::string_view name);

}  // namespace weber
