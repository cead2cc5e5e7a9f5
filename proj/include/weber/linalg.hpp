#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weber/exactnum.hpp"

namespace weber::linalg {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatVector = std::vector<Rational>;

// 62-bit word-prime arithmetic used by the multimodular solvers.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);
/// The k-th prime below 2^62, counting downwards.
std::uint64_t word_prime(std::size_t k);
std::uint64_t reduce(const Integer& v, std::uint64_t p);

/// Rational r with r = a mod m and |num|, den <= sqrt(m/2), if one exists.
std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m);

struct ModEchelon {
  std::vector<std::size_t> pivots;
  std::vector<std::vector<std::uint64_t>> rows;  // reduced rows, one per pivot
};

/// Reduced row echelon form of an integer matrix modulo p (ncols columns).
ModEchelon echelon_mod(const IntMatrix& a, std::size_t ncols, std::uint64_t p);
ModEchelon echelon_mod(std::vector<std::vector<std::uint64_t>> a, std::size_t ncols, std::uint64_t p);

/// Basis of the right kernel of `a` over Q: one vector per free column of the
/// reduced echelon form, with a 1 in that column. Computed multimodularly and
/// checked exactly against `a` before returning.
std::vector<RatVector> rational_nullspace(const IntMatrix& a, std::size_t ncols);

/// Upper bound on the kernel dimension over Q (exact for all but finitely many p).
std::size_t nullity_mod(const IntMatrix& a, std::size_t ncols, std::uint64_t p);

}  // namespace weber::linalg
