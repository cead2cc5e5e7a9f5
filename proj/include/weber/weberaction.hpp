#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "weber/exactnum.hpp"

namespace weber {

/// 3x3 matrix over Q(zeta_48), row-major. Acts on row vectors
/// (u0, u1, u2) from the right, so iota(gh) = iota(g) iota(h).
struct CycMat3 {
  std::array<CycloElt, 9> e;

  static CycMat3 identity();
  static CycMat3 scalar(const CycloElt& c);
  static CycMat3 diag(const CycloElt& a, const CycloElt& b, const CycloElt& c);
  CycloElt& at(int i, int j) { return e[static_cast<std::size_t>(3 * i + j)]; }
  const CycloElt& at(int i, int j) const { return e[static_cast<std::size_t>(3 * i + j)]; }

  CycMat3 operator*(const CycMat3& o) const;
  friend bool operator==(const CycMat3& a, const CycMat3& b) { return a.e == b.e; }
  CycMat3 pow(long k) const;  // k >= 0
  /// Inverse of a monomial matrix; DomainError otherwise.
  CycMat3 monomial_inverse() const;

  bool is_monomial() const;
  bool is_diagonal() const;
  /// For monomial M: perm[i] = column of the nonzero entry in row i.
  std::array<int, 3> permutation() const;
  /// Canonical serialization used as a hash key.
  std::string key() const;
  std::string to_string() const;
};

CycMat3 iota_S();
CycMat3 iota_T();
/// Product over a word in S, T and their inverses s, t, read left to right.
/// Throws DomainError on other symbols.
CycMat3 iota_word(std::string_view word);

struct GroupReport {
  std::size_t order_G = 0;
  std::size_t order_D = 0;
  bool D_abelian = false;
  bool D_generated_by_T2_STS2 = false;  // D = <iota(T)^2, iota(STS)^2>
  bool all_monomial = false;
  bool permutation_is_homomorphism = false;
  std::size_t permutation_image = 0;  // 6 for S3
  bool kernel_is_D = false;
  bool U_V_W_permutations = false;  // U = T^-1 S T, V = T^-2 S T^2, W = S T^3
  bool S_squared_identity = false;
  bool ST_cubed_scalar = false;
  bool T16_relation = false;  // iota(T)^16 = iota(STS)^16 = zeta3^-1 I
};

/// BFS closure of <iota(S), iota(T)>. DivergenceError past `bound` elements.
std::vector<CycMat3> group_closure_elements(std::size_t bound = 4096);
GroupReport group_report(std::size_t bound = 4096);

/// 2x2 matrices over Z/NZ.
struct SL2Mod {
  long a, b, c, d, N;
  SL2Mod operator*(const SL2Mod& o) const;
  SL2Mod inverse() const;
  friend bool operator==(const SL2Mod& x, const SL2Mod& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d && x.N == y.N;
  }
};

struct SL2Report {
  SL2Mod commutator;         // T^2 U^2 T^-2 U^-2 mod 16, U = S T S^-1
  SL2Mod commutator_squared;
  SL2Mod commutator_mod8;
  bool matches = false;      // == (13 8 / 8 5)
  bool square_matches = false;  // == 9 I
  bool mod8_scalar = false;     // == 5 I mod 8
  bool acts_trivially_on_cubes = false;  // iota(word) diagonal with cube-root-of-unity entries
};
SL2Report sl2_identity_check();

}  // namespace weber
