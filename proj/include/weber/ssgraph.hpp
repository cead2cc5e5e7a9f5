#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weber/cache.hpp"
#include "weber/gf.hpp"
#include "weber/lines.hpp"
#include "weber/modpoly.hpp"

namespace weber {

/// Modular polynomial used for graph edges on (line, ell): a builtin when
/// one exists, otherwise generated (through `cache` when given). Memoized
/// per process.
const BiPoly& modular_polynomial(const InvariantLine& line, int ell, PolyCache* cache = nullptr);

/// Supersingular j-invariants, sorted canonically. Roots of the Hasse
/// polynomial pushed through j(lambda), cross-checked against a Phi_2 BFS;
/// InternalError if the two disagree. Requires p >= 5.
std::vector<GF2Elt> ss_j_enumerate(const GF2Field& f);
/// floor(p/12) + (0, 1, 1, 2) for p = (1, 5, 7, 11) mod 12.
std::size_t ss_count_formula(std::uint64_t p);

/// Roots with multiplicity of num(x) - j0 den(x) for the line's j-map.
std::vector<Root> nodes_above(const InvariantLine& line, const GF2Elt& j0);

struct SSNode {
  GF2Elt value;
  int mult = 1;  // ramification weight above j
};
struct SSEdge {
  std::size_t src, dst;
  int mult;
};
struct SSGraph {
  GF2Field field;
  std::string line;
  int ell = 0;
  int out_degree = 0;  // deg_y of the modular polynomial
  std::vector<SSNode> nodes;
  std::vector<SSEdge> edges;  // sorted by (src, dst)

  std::optional<std::size_t> index_of(const GF2Elt& v) const;
  std::vector<int> out_sums() const;
  std::string to_json() const;
  std::string to_dot() const;
};

/// Nodes above every supersingular j; edges from the roots of Phi(u, y).
/// InternalError if a root leaves F_{p^2} or the node set.
SSGraph build_graph(const GF2Field& f, const InvariantLine& line, int ell, PolyCache* cache = nullptr);

struct SplitEntry {
  GF2Elt j0;
  int distinct = 0;
  int total = 0;           // sum of multiplicities found in F_{p^2}
  std::vector<int> mults;  // multiplicity histogram: mults[k] = #roots of multiplicity k
  bool ok = false;
};
struct SplitReport {
  std::uint64_t p = 0;
  std::vector<SplitEntry> entries;
  std::size_t violations = 0;
};
/// (x^24 - 16)^3 - j0 x^24 for each supersingular j0: 72 simple roots, or
/// 24 triple roots at j0 = 0, or 24 simple + 24 double roots at j0 = 1728.
SplitReport split_check(const GF2Field& f);

struct WalkResult {
  std::vector<GF2Elt> path;  // path[0] = u0
  bool dead_end = false;
};
/// Random non-backtracking walk along roots of Phi(u_{i-1}, y).
WalkResult walk(const GF2Field& f, const InvariantLine& line, int ell, const GF2Elt& u0, int length,
                std::uint64_t seed, PolyCache* cache = nullptr);

}  // namespace weber
