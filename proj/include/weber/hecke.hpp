#pragma once

#include <map>
#include <string>
#include <vector>

#include "weber/linalg.hpp"
#include "weber/ssgraph.hpp"

namespace weber {

/// Adjacency operator: m[dst][src] = edge multiplicity, so columns are
/// sources and every column sums to the out-degree.
struct HeckeOp {
  int ell = 0;
  std::vector<std::vector<long>> m;
  std::size_t dim() const { return m.size(); }
};

HeckeOp hecke_matrix(const SSGraph& g);
/// Exact AB == BA. DomainError on dimension mismatch.
bool commute_check(const HeckeOp& a, const HeckeOp& b);
/// All-ones row vector is a left eigenvector with eigenvalue ell+1.
bool eisenstein_left_check(const HeckeOp& a);

struct Eigensystem {
  std::map<int, long> eigenvalues;  // ell -> a_ell
  std::size_t dim = 0;
  std::vector<linalg::RatVector> basis;
  bool eisenstein = false;
};

/// Maximal simultaneous integer eigenspaces, by enumerating candidates
/// a_ell in [-floor(2 sqrt ell), floor(2 sqrt ell)] and ell+1 and
/// intersecting exact rational kernels. DomainError if the operators do not
/// commute or have different dimensions.
std::vector<Eigensystem> eigen_sieve(const std::vector<HeckeOp>& ops, bool exclude_eisenstein = true);
/// |a_ell| <= 2 sqrt(ell), exactly (a^2 <= 4 ell).
bool within_hasse(const Eigensystem& s);

/// The eight quadratic characters mod 24, indexed by bits (chi_-4, chi_8, chi_-3).
int quadratic_character_24(int index, long n);

struct TwistOrbit {
  std::vector<std::size_t> members;  // indices into the input list
  std::vector<int> characters;       // character relating each member to members[0]
  bool ambiguous = false;            // size outside {1, 2, 4}
};
/// Groups systems whose eigenvalues agree up to a quadratic character mod 24
/// on the tested primes. DomainError if the line has trivial fibre action.
std::vector<TwistOrbit> twist_orbits(const std::vector<Eigensystem>& systems, const InvariantLine& line);

/// First `count` primes not dividing 6p.
std::vector<int> default_hecke_primes(std::uint64_t p, std::size_t count = 4);

}  // namespace weber
