#include "weber/ssgraph.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>

#include "json.hpp"

#include "weber/error.hpp"
#include "weber/reduction.hpp"

namespace weber {

const BiPoly& modular_polynomial(const InvariantLine& line, int ell, PolyCache* cache) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, BiPoly> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(line.name, ell);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  BiPoly poly;
  if (auto name = builtin_name_for(line, ell)) {
    poly = builtin(*name);
  } else if (cache) {
    poly = cache->get(line, ell);
  } else {
    poly = generate(line, ell);
  }
  return memo.emplace(key, std::move(poly)).first->second;
}

std::size_t ss_count_formula(std::uint64_t p) {
  static const std::size_t eps[12] = {0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 2};
  return static_cast<std::size_t>(p / 12) + eps[p % 12];
}

namespace {

GF2Elt I(const GF2Field& f, long v) { return GF2Elt::from_int(f, v); }

std::vector<GF2Elt> hasse_js(const GF2Field& f) {
  const std::uint64_t m = (f.p - 1) / 2;
  std::vector<GF2Elt> c;
  GF2Elt binom = one(f);
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (i > 0) binom = binom * GF2Elt(f, (m - i + 1) % f.p) / GF2Elt(f, i % f.p);
    c.push_back(binom * binom);
  }
  std::set<GF2Elt> js;
  for (const auto& r : roots(GFPoly(f, c))) {
    const GF2Elt& l = r.value;
    GF2Elt q = l * l - l + one(f);
    GF2Elt d = l * (l - one(f));
    js.insert(I(f, 256) * q * q * q / (d * d));
  }
  return {js.begin(), js.end()};
}

std::vector<GF2Elt> distinct_roots(const GFPoly& g) {
  std::vector<GF2Elt> out;
  if (g.degree() < 1) return out;
  for (const auto& r : roots(g)) out.push_back(r.value);
  return out;
}

}  // namespace

std::vector<GF2Elt> ss_j_enumerate(const GF2Field& f) {
  if (f.p < 5) throw DomainError("supersingular enumeration needs p >= 5");
  std::vector<GF2Elt> hasse = hasse_js(f);
  // Phi_2 closure from the first Hasse value: the 2-isogeny graph on
  // supersingular j is connected, so this reaches the whole set.
  const BiPoly& phi2 = modular_polynomial(line_by_name("j"), 2);
  std::set<GF2Elt> seen{hasse.front()};
  std::vector<GF2Elt> queue{hasse.front()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& v : distinct_roots(specialize_x(phi2, queue[i])))
      if (seen.insert(v).second) queue.push_back(v);
  }
  std::vector<GF2Elt> bfs(seen.begin(), seen.end());
  if (bfs != hasse)
    throw InternalError("Hasse enumeration (" + std::to_string(hasse.size()) + ") and Phi_2 closure (" +
                        std::to_string(bfs.size()) + ") disagree at p=" + std::to_string(f.p));
  return hasse;
}

std::vector<Root> nodes_above(const InvariantLine& line, const GF2Elt& j0) {
  const GF2Field f = j0.field();
  std::size_t n = std::max(line.j_numerator.size(), line.j_denominator.size());
  std::vector<GF2Elt> c(n, zero(f));
  for (std::size_t i = 0; i < line.j_numerator.size(); ++i) c[i] += GF2Elt::from_integer(f, line.j_numerator[i]);
  for (std::size_t i = 0; i < line.j_denominator.size(); ++i)
    c[i] -= j0 * GF2Elt::from_integer(f, line.j_denominator[i]);
  return roots(GFPoly(f, c));
}

std::optional<std::size_t> SSGraph::index_of(const GF2Elt& v) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), v, [](const SSNode& n, const GF2Elt& x) { return n.value < x; });
  if (it == nodes.end() || it->value != v) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

std::vector<int> SSGraph::out_sums() const {
  std::vector<int> s(nodes.size(), 0);
  for (const auto& e : edges) s[e.src] += e.mult;
  return s;
}

std::string SSGraph::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = field.p;
  j["d"] = field.d;
  j["line"] = line;
  j["ell"] = ell;
  j["out_degree"] = out_degree;
  j["nodes"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < nodes.size(); ++i)
    j["nodes"].push_back({{"id", i}, {"value", nodes[i].value.encode()}, {"mult", nodes[i].mult}});
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : edges) j["edges"].push_back({e.src, e.dst, e.mult});
  return j.dump(2);
}

std::string SSGraph::to_dot() const {
  std::string s = "digraph ss_" + line + "_" + std::to_string(ell) + " {\n";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    s += "  n" + std::to_string(i) + " [label=\"" + nodes[i].value.encode() + "\"];\n";
  for (const auto& e : edges)
    s += "  n" + std::to_string(e.src) + " -> n" + std::to_string(e.dst) + " [label=\"" + std::to_string(e.mult) +
         "\"];\n";
  return s + "}\n";
}

SSGraph build_graph(const GF2Field& f, const InvariantLine& line, int ell, PolyCache* cache) {
  SSGraph g;
  g.field = f;
  g.line = line.name;
  g.ell = ell;
  for (const auto& j0 : ss_j_enumerate(f))
    for (const auto& r : nodes_above(line, j0)) g.nodes.push_back({r.value, r.multiplicity});
  if (g.nodes.empty()) throw InternalError("empty supersingular node set");
  std::sort(g.nodes.begin(), g.nodes.end(), [](const SSNode& a, const SSNode& b) { return a.value < b.value; });

  const BiPoly& phi = modular_polynomial(line, ell, cache);
  g.out_degree = phi.degree_y();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    GFPoly h = specialize_x(phi, g.nodes[i].value);
    int total = 0;
    for (const auto& r : roots(h)) {
      auto k = g.index_of(r.value);
      if (!k)
        throw InternalError("neighbour " + r.value.encode() + " of " + g.nodes[i].value.encode() +
                            " is not a supersingular node");
      g.edges.push_back({i, *k, r.multiplicity});
      total += r.multiplicity;
    }
    if (total != h.degree())
      throw InternalError("Phi(" + g.nodes[i].value.encode() + ", y) does not split over F_{p^2}");
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const SSEdge& a, const SSEdge& b) { return std::tie(a.src, a.dst) < std::tie(b.src, b.dst); });
  return g;
}

SplitReport split_check(const GF2Field& f) {
  SplitReport rep;
  rep.p = f.p;
  const GF2Elt j1728 = I(f, 1728);
  for (const auto& j0 : ss_j_enumerate(f)) {
    // (y - 16)^3 - j0 y with y = x^24
    std::vector<GF2Elt> c(73, zero(f));
    c[72] = one(f);
    c[48] = I(f, -48);
    c[24] = I(f, 768) - j0;
    c[0] = I(f, -4096);
    SplitEntry e;
    e.j0 = j0;
    e.mults.assign(4, 0);
    for (const auto& r : roots(GFPoly(f, c))) {
      ++e.distinct;
      e.total += r.multiplicity;
      if (r.multiplicity < 4) ++e.mults[static_cast<std::size_t>(r.multiplicity)];
    }
    if (j0.is_zero()) {
      e.ok = e.total == 72 && e.distinct == 24 && e.mults[3] == 24;
    } else if (j0 == j1728) {
      e.ok = e.total == 72 && e.distinct == 48 && e.mults[1] == 24 && e.mults[2] == 24;
    } else {
      e.ok = e.total == 72 && e.distinct == 72;
    }
    if (!e.ok) ++rep.violations;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

WalkResult walk(const GF2Field& f, const InvariantLine& line, int ell, const GF2Elt& u0, int length,
                std::uint64_t seed, PolyCache* cache) {
  if (length < 1) throw DomainError("walk length must be >= 1");
  if (u0.field().p != f.p) throw DomainError("start value is not in the given field");
  const BiPoly& phi = modular_polynomial(line, ell, cache);
  std::mt19937_64 rng(seed);
  WalkResult w;
  w.path.push_back(u0);
  for (int step = 0; step < length; ++step) {
    std::vector<GF2Elt> next = distinct_roots(specialize_x(phi, w.path.back()));
    if (next.empty()) {
      w.dead_end = true;
      break;
    }
    if (w.path.size() >= 2) {
      const GF2Elt& prev = w.path[w.path.size() - 2];
      std::vector<GF2Elt> forward;
      for (const auto& v : next)
        if (v != prev) forward.push_back(v);
      if (!forward.empty()) next = std::move(forward);
    }
    w.path.push_back(next[rng() % next.size()]);
  }
  return w;
}

}  // namespace weber
