#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "weber/error.hpp"
#include "weber/reduction.hpp"
#include "weber/ssgraph.hpp"

using namespace weber;

namespace {

GF2Elt I(const GF2Field& f, long v) { return GF2Elt::from_int(f, v); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("supersingular j-invariants") {
  GF2Field f13 = make_field(13);
  CHECK(ss_j_enumerate(f13) == std::vector<GF2Elt>{I(f13, 5)});
  GF2Field f11 = make_field(11);
  CHECK(ss_j_enumerate(f11) == std::vector<GF2Elt>{I(f11, 0), I(f11, 1)});
  CHECK(ss_j_enumerate(make_field(101)).size() == 9);
  for (std::uint64_t p = 5; p < 200; ++p) {
    if (!is_prime(p)) continue;
    CHECK(ss_j_enumerate(make_field(p)).size() == ss_count_formula(p));
  }
  // j = 0 is supersingular iff p = 2 mod 3, j = 1728 iff p = 3 mod 4.
  for (std::uint64_t p : {29ULL, 31ULL, 37ULL, 43ULL}) {
    GF2Field f = make_field(p);
    auto js = ss_j_enumerate(f);
    bool has0 = std::find(js.begin(), js.end(), I(f, 0)) != js.end();
    bool has1728 = std::find(js.begin(), js.end(), I(f, 1728)) != js.end();
    CHECK(has0 == (p % 3 == 2));
    CHECK(has1728 == (p % 4 == 3));
  }
}

TEST_CASE("fibres above j") {
  GF2Field f = make_field(101);
  const InvariantLine& x1 = line_by_name("x1");
  auto r = nodes_above(x1, I(f, 1728));
  // (u - 16)^3 - 1728 u = (u - 64)(u + 8)^2
  REQUIRE(r.size() == 2);
  CHECK(r[0].value == I(f, 64));
  CHECK(r[0].multiplicity == 1);
  CHECK(r[1].value == I(f, -8));
  CHECK(r[1].multiplicity == 2);
  auto r0 = nodes_above(x1, I(f, 0));
  REQUIRE(r0.size() == 1);
  CHECK(r0[0].value == I(f, 16));
  CHECK(r0[0].multiplicity == 3);
  // p = 101 = 2 mod 3: j = 0 is supersingular; 24 triple roots on x24.
  auto r24 = nodes_above(line_by_name("x24"), I(f, 0));
  CHECK(r24.size() == 24);
  for (const auto& x : r24) CHECK(x.multiplicity == 3);
}

TEST_CASE("small graphs") {
  GF2Field f = make_field(13);
  SSGraph g = build_graph(f, line_by_name("x1"), 5);
  CHECK(g.nodes.size() == 3);
  for (int s : g.out_sums()) CHECK(s == 6);
  SSGraph gj = build_graph(f, line_by_name("j"), 2);
  REQUIRE(gj.nodes.size() == 1);
  REQUIRE(gj.edges.size() == 1);
  CHECK(gj.edges[0].mult == 3);
  auto doc = nlohmann::json::parse(g.to_json());
  CHECK(doc["p"] == 13);
  CHECK(doc["nodes"].size() == 3);
  CHECK(g.to_dot().find("->") != std::string::npos);
}

TEST_CASE("graphs on several lines have constant out-degree") {
  for (std::uint64_t p : {37ULL, 61ULL}) {
    GF2Field f = make_field(p);
    for (const char* name : {"j", "x1", "x3", "y1", "x24"}) {
      for (int ell : {5, 7}) {
        SSGraph g = build_graph(f, line_by_name(name), ell);
        const InvariantLine& L = line_by_name(name);
        std::size_t weight = 0;
        for (const auto& n : g.nodes) weight += static_cast<std::size_t>(n.mult);
        CHECK(weight == static_cast<std::size_t>(L.cover_degree) * ss_count_formula(p));
        for (int s : g.out_sums()) CHECK(s == ell + 1);
      }
    }
    // p = 1 mod 12: the j-line adjacency matrix is symmetric.
    SSGraph gj = build_graph(f, line_by_name("j"), 5);
    std::map<std::pair<std::size_t, std::size_t>, int> m;
    for (const auto& e : gj.edges) m[{e.src, e.dst}] = e.mult;
    for (const auto& [k, v] : m) CHECK(m[{k.second, k.first}] == v);
  }
}

TEST_CASE("descended relations give graphs too") {
  GF2Field f = make_field(37);
  SSGraph gt = build_graph(f, line_by_name("t"), 2);
  for (int s : gt.out_sums()) CHECK(s == gt.out_degree);
  SSGraph g24 = build_graph(f, line_by_name("x24"), 2);
  CHECK(g24.out_degree == 16);
  for (int s : g24.out_sums()) CHECK(s == g24.out_degree);
}

TEST_CASE("x24 edges map to classical edges") {
  GF2Field f = make_field(13);
  const InvariantLine& x24 = line_by_name("x24");
  SSGraph g = build_graph(f, x24, 5);
  const BiPoly& phi5 = modular_polynomial(line_by_name("j"), 5);
  for (const auto& e : g.edges) {
    GF2Elt a = g.nodes[e.src].value, b = g.nodes[e.dst].value;
    GF2Elt ja = eval_int_poly(x24.j_numerator, a) / eval_int_poly(x24.j_denominator, a);
    GF2Elt jb = eval_int_poly(x24.j_numerator, b) / eval_int_poly(x24.j_denominator, b);
    CHECK(evaluate(phi5, ja, jb).is_zero());
  }
}

TEST_CASE("splitting of the degree 72 polynomial") {
  auto r13 = split_check(make_field(13));
  REQUIRE(r13.entries.size() == 1);
  CHECK(r13.entries[0].distinct == 72);
  auto r101 = split_check(make_field(101));
  CHECK(r101.violations == 0);
  bool saw0 = false;
  for (const auto& e : r101.entries)
    if (e.j0.is_zero()) {
      saw0 = true;
      CHECK(e.distinct == 24);
      CHECK(e.mults[3] == 24);
    }
  CHECK(saw0);
  CHECK(split_check(make_field(43)).violations == 0);  // 43 = 3 mod 4: j = 1728 appears
}

TEST_CASE("walks follow the modular relation") {
  GF2Field f = make_field(13);
  const InvariantLine& x1 = line_by_name("x1");
  SSGraph g = build_graph(f, x1, 5);
  const BiPoly& phi = modular_polynomial(x1, 5);
  WalkResult w = walk(f, x1, 5, g.nodes[0].value, 10, 42);
  CHECK_FALSE(w.dead_end);
  CHECK(w.path.size() == 11);
  for (std::size_t i = 1; i < w.path.size(); ++i) {
    CHECK(g.index_of(w.path[i]).has_value());
    CHECK(evaluate(phi, w.path[i - 1], w.path[i]).is_zero());
  }
  CHECK(walk(f, x1, 5, g.nodes[0].value, 10, 42).path == w.path);
  CHECK(walk(f, x1, 5, g.nodes[0].value, 1, 7).path.size() == 2);
}

TEST_CASE("polynomial cache round trip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "weber-cache-test";
  fs::remove_all(dir);
  PolyCache cache(dir);
  const InvariantLine& x24 = line_by_name("x24");
  std::vector<std::string> warnings;
  BiPoly a = cache.get(x24, 7, &warnings);
  CHECK_FALSE(cache.last_hit());
  BiPoly b = cache.get(x24, 7, &warnings);
  CHECK(cache.last_hit());
  CHECK(a == b);
  CHECK(warnings.empty());
  std::ofstream(cache.entry_path("x24", 7)) << "garbage\n";
  BiPoly c = cache.get(x24, 7, &warnings);
  CHECK_FALSE(cache.last_hit());
  CHECK(c == a);
  CHECK(warnings.size() == 1);
  CHECK(cache.get(x24, 7).size() == a.size());
  CHECK(cache.last_hit());
  fs::remove_all(dir);
}
