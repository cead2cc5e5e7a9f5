#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "weber/cache.hpp"
#include "weber/chains.hpp"
#include "weber/error.hpp"
#include "weber/hecke.hpp"
#include "weber/linalg.hpp"
#include "weber/models.hpp"
#include "weber/modpoly.hpp"
#include "weber/reports.hpp"
#include "weber/ssgraph.hpp"
#include "weber/weberaction.hpp"

namespace weber::cli {

using Json = nlohmann::ordered_json;

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

struct Flags {
  std::uint64_t p = 0;
  std::uint64_t p_max = 0;
  std::string line;
  int ell = 0;
  std::string ells;
  long prec = 0;
  std::optional<std::uint64_t> seed;
  std::string format;  // empty: the subcommand default
  std::string out;
  int trials = 0;
  int length = 10;
  std::string variant = "standard";
  std::string cache_dir;
  bool no_cache = false;
  bool timing = false;
};

// Result of one subcommand: the primary output and whether every check held.
struct Outcome {
  std::string text;
  bool ok = true;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Everything that can change the primary output, in a fixed order. Output
// paths and cache settings are deliberately left out.
std::string canonical_flags(const std::string& sub, const Flags& f) {
  std::ostringstream s;
  s << sub << " p=" << f.p << " p-max=" << f.p_max << " line=" << f.line << " ell=" << f.ell << " ells=" << f.ells
    << " prec=" << f.prec << " format=" << f.format << " trials=" << f.trials << " length=" << f.length
    << " variant=" << f.variant;
  return s.str();
}

std::uint64_t effective_seed(const std::string& sub, const Flags& f) {
  return f.seed ? *f.seed : fnv1a(canonical_flags(sub, f));
}

PolyCache make_cache(const Flags& f) {
  return PolyCache(f.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(f.cache_dir), !f.no_cache);
}

void emit_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << Json{{"warning", w}}.dump() << "\n";
}

std::vector<int> parse_ells(const std::string& text) {
  std::vector<int> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--ells expects a comma-separated list of integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("--ells is empty");
  return out;
}

Json cyclo_terms(const BiPoly& P) {
  Json terms = Json::array();
  for (const auto& [k, c] : P.terms()) terms.push_back({k.first, k.second, c.to_string()});
  return terms;
}

// ---------------------------------------------------------------- modpoly

Outcome cmd_modpoly(const Flags& f, std::ostream& err) {
  const InvariantLine& line = line_by_name(f.line);
  PolyCache cache = make_cache(f);
  std::vector<std::string> warnings;
  BiPoly P = cache.get(line, f.ell, &warnings);
  emit_warnings(warnings, err);
  if (f.format.empty() || f.format == "text") return {serialize(P, line.name, f.ell)};
  if (f.format != "json") throw UsageError("modpoly supports --format text|json");
  Json j;
  j["line"] = line.name;
  j["ell"] = f.ell;
  j["normalization"] = "monic-x";
  j["degree_x"] = P.degree_x();
  j["degree_y"] = P.degree_y();
  j["nonzero"] = P.size();
  j["terms"] = cyclo_terms(P);
  return {dump(j)};
}

Outcome cmd_modpoly_verify(const Flags& f, std::ostream& err) {
  const InvariantLine& line = line_by_name(f.line);
  PolyCache cache = make_cache(f);
  std::vector<std::string> warnings;
  BiPoly P = cache.get(line, f.ell, &warnings);
  emit_warnings(warnings, err);

  VerifyReport r = verify(P, line, f.ell, f.prec);
  Json j;
  j["line"] = line.name;
  j["ell"] = f.ell;
  j["nonzero"] = P.size();
  j["vanishes"] = r.vanishes;
  j["precision"] = r.precision;
  if (r.first_nonzero_exponent) {
    j["first_nonzero_exponent"] = *r.first_nonzero_exponent;
    j["first_nonzero_coeff"] = r.first_nonzero_coeff;
  }
  bool ok = r.vanishes;
  // The mod-24 structure only holds on the f-line away from the descended levels.
  if (line.sparsity_modulus && f.ell >= 5) {
    bool sparse = check_sparsity(P, f.ell), transform = check_transform(P, f.ell);
    j["sparsity"] = sparse;
    j["transform"] = transform;
    ok = ok && sparse && transform;
  }
  j["symmetric"] = is_symmetric(P);
  if (auto name = builtin_name_for(line, f.ell)) {
    bool same = builtin(*name) == P;
    j["builtin"] = *name;
    j["matches_builtin"] = same;
    ok = ok && same;
  }
  j["ok"] = ok;
  return {dump(j), ok};
}

// ---------------------------------------------------------------- qid / groups

Outcome cmd_qid(const Flags& f, std::ostream&) {
  long prec = f.prec > 0 ? f.prec : 48 * 210;
  Json j;
  j["precision"] = prec;
  j["identities"] = Json::array();
  bool ok = true;
  for (const auto& c : qid_report(prec)) {
    j["identities"].push_back({{"name", c.name}, {"vanishes", c.vanishes}, {"precision", c.terms}, {"q_terms", c.terms / 48}});
    ok = ok && c.vanishes;
  }
  j["ok"] = ok;
  return {dump(j), ok};
}

Json sl2_json(const SL2Mod& m) { return Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})}); }

Outcome cmd_group(const Flags&, std::ostream&) {
  GroupReport g = group_report();
  SL2Report s = sl2_identity_check();
  Json j;
  j["orderG"] = g.order_G;
  j["orderD"] = g.order_D;
  j["quotient_order"] = g.permutation_image;
  j["D_abelian"] = g.D_abelian;
  j["D_generated_by_T2_STS2"] = g.D_generated_by_T2_STS2;
  j["all_monomial"] = g.all_monomial;
  j["permutation_is_homomorphism"] = g.permutation_is_homomorphism;
  j["kernel_is_D"] = g.kernel_is_D;
  j["U_V_W_permutations"] = g.U_V_W_permutations;
  j["S_squared_identity"] = g.S_squared_identity;
  j["ST_cubed_scalar"] = g.ST_cubed_scalar;
  j["T16_relation"] = g.T16_relation;
  j["sl2"] = {{"modulus", s.commutator.N},
              {"commutator", sl2_json(s.commutator)},
              {"commutator_squared", sl2_json(s.commutator_squared)},
              {"matches", s.matches},
              {"square_matches", s.square_matches},
              {"mod8_scalar", s.mod8_scalar},
              {"acts_trivially_on_cubes", s.acts_trivially_on_cubes}};
  bool ok = g.order_G == 1152 && g.order_D == 192 && g.permutation_image == 6 && g.D_abelian &&
            g.D_generated_by_T2_STS2 && g.all_monomial && g.permutation_is_homomorphism && g.kernel_is_D &&
            g.U_V_W_permutations && g.S_squared_identity && g.ST_cubed_scalar && g.T16_relation && s.matches &&
            s.square_matches;
  j["ok"] = ok;
  return {dump(j), ok};
}

// ---------------------------------------------------------------- graphs

Outcome cmd_ss(const Flags& f, std::ostream&) {
  GF2Field field = make_field(f.p);
  const InvariantLine& line = line_by_name(f.line);
  PolyCache cache = make_cache(f);
  SSGraph g = build_graph(field, line, f.ell, &cache);
  if (f.format == "dot") return {g.to_dot()};
  if (!f.format.empty() && f.format != "json") throw UsageError("ss supports --format json|dot");
  return {g.to_json() + "\n"};
}

Json split_json(const SplitReport& r) {
  Json j;
  j["p"] = r.p;
  j["supersingular"] = r.entries.size();
  j["violations"] = r.violations;
  j["entries"] = Json::array();
  for (const auto& e : r.entries) {
    Json hist = Json::object();
    for (std::size_t k = 1; k < e.mults.size(); ++k)
      if (e.mults[k] != 0) hist[std::to_string(k)] = e.mults[k];
    j["entries"].push_back(
        {{"j0", e.j0.encode()}, {"distinct", e.distinct}, {"total", e.total}, {"multiplicities", hist}, {"ok", e.ok}});
  }
  return j;
}

Outcome cmd_split(const Flags& f, std::ostream&) {
  std::vector<std::uint64_t> primes;
  if (f.p_max != 0) {
    for (std::uint64_t q = 5; q < f.p_max; ++q)
      if (linalg::is_prime(q)) primes.push_back(q);
  } else {
    primes.push_back(f.p);
  }
  Json j;
  j["primes"] = Json::array();
  std::size_t violations = 0;
  for (auto q : primes) {
    if (q < 5) throw DomainError("split-check needs p >= 5");
    SplitReport r = split_check(make_field(q));
    violations += r.violations;
    j["primes"].push_back(split_json(r));
  }
  j["violations"] = violations;
  j["ok"] = violations == 0;
  return {dump(j), violations == 0};
}

Outcome cmd_hecke(const Flags& f, std::ostream&) {
  auto t_start = std::chrono::steady_clock::now();
  GF2Field field = make_field(f.p);
  const InvariantLine& line = line_by_name(f.line.empty() ? "j" : f.line);
  std::vector<int> ells = f.ells.empty() ? default_hecke_primes(f.p) : parse_ells(f.ells);
  PolyCache cache = make_cache(f);

  std::vector<HeckeOp> ops;
  std::size_t nodes = 0;
  bool column_sums = true, eisenstein = true;
  Json degrees = Json::object();
  for (int ell : ells) {
    SSGraph g = build_graph(field, line, ell, &cache);
    nodes = g.nodes.size();
    for (int s : g.out_sums()) column_sums = column_sums && s == g.out_degree;
    degrees[std::to_string(ell)] = g.out_degree;
    ops.push_back(hecke_matrix(g));
    eisenstein = eisenstein && eisenstein_left_check(ops.back());
  }
  auto t_graphs = std::chrono::steady_clock::now();

  bool commute = true;
  for (std::size_t a = 0; a < ops.size(); ++a)
    for (std::size_t b = a + 1; b < ops.size(); ++b) commute = commute && commute_check(ops[a], ops[b]);

  Json j;
  j["p"] = f.p;
  j["line"] = line.name;
  j["nodes"] = nodes;
  j["ells"] = ells;
  j["out_degree"] = degrees;
  j["column_sums_ok"] = column_sums;
  j["commute"] = commute;
  j["eisenstein_left"] = eisenstein;

  bool hasse = true;
  if (commute) {
    std::vector<Eigensystem> systems = eigen_sieve(ops);
    j["eigensystems"] = Json::array();
    for (const auto& s : systems) {
      Json ev = Json::object();
      for (const auto& [ell, a] : s.eigenvalues) ev[std::to_string(ell)] = a;
      bool in = within_hasse(s);
      hasse = hasse && in;
      j["eigensystems"].push_back({{"eigenvalues", ev}, {"dim", s.dim}, {"within_hasse", in}});
    }
    j["count"] = systems.size();
    if (line.fiber_action_order > 1) {
      j["orbit_rule"] = "quadratic characters mod 24 on the tested primes";
      j["orbits"] = Json::array();
      for (const auto& o : twist_orbits(systems, line))
        j["orbits"].push_back({{"members", o.members}, {"characters", o.characters}, {"ambiguous", o.ambiguous}});
    } else {
      j["orbits"] = nullptr;
    }
  }
  j["within_hasse"] = hasse;
  bool ok = column_sums && commute && eisenstein && hasse;
  j["ok"] = ok;
  if (f.timing) {
    auto t_end = std::chrono::steady_clock::now();
    auto ms = [](auto a, auto b) { return std::chrono::duration<double, std::milli>(b - a).count(); };
    j["timing_ms"] = {{"graphs", ms(t_start, t_graphs)}, {"sieve", ms(t_graphs, t_end)}};
  }
  return {dump(j), ok};
}

Outcome cmd_walk(const Flags& f, std::ostream&) {
  GF2Field field = make_field(f.p);
  const InvariantLine& line = line_by_name(f.line);
  if (f.length < 0) throw UsageError("--length must be non-negative");
  std::uint64_t seed = effective_seed("walk", f);
  PolyCache cache = make_cache(f);

  std::vector<GF2Elt> start;
  for (const auto& j0 : ss_j_enumerate(field))
    for (const auto& r : nodes_above(line, j0)) start.push_back(r.value);
  std::sort(start.begin(), start.end());
  std::mt19937_64 rng(seed);
  GF2Elt u0 = start[rng() % start.size()];
  WalkResult w = walk(field, line, f.ell, u0, f.length, rng(), &cache);

  Json j;
  j["p"] = f.p;
  j["line"] = line.name;
  j["ell"] = f.ell;
  j["seed"] = seed;
  j["length"] = w.path.size() - 1;
  j["dead_end"] = w.dead_end;
  j["path"] = Json::array();
  for (const auto& u : w.path) j["path"].push_back(u.encode());
  return {dump(j)};
}

// ---------------------------------------------------------------- chains / models

Json curve_json(const Curve& c) { return {{"a2", c.a2.encode()}, {"a4", c.a4.encode()}, {"a6", c.a6.encode()}}; }
Json point_json(const Point& P) {
  if (P.is_identity()) return "O";
  return Json::array({P.X.encode(), P.Y.encode()});
}

Json chain_json(const ChainWitness& w, std::mt19937_64& rng, bool& ok) {
  const GF2Field field = w.t3.field();
  const Point origin = Point::affine(zero(field), zero(field));
  Json j;
  j["t3"] = w.t3.encode();
  Json k = {{"t2", w.t2.encode()}, {"t1", w.t1.encode()}, {"t0", w.t0.encode()},
            {"c0", w.c0.encode()}, {"e0", w.e0.encode()}, {"c1", w.c1.encode()},
            {"e1", w.e1.encode()}, {"c2", w.c2.encode()}};
  if (w.variant == ChainVariant::Standard) {
    k["c3"] = w.c3.encode();
  } else {
    k["e2"] = w.e2.encode();
    k["u3"] = w.u3.encode();
  }
  j["constants"] = k;
  j["curves"] = Json::array();
  for (const auto& c : w.curves) j["curves"].push_back(curve_json(c));
  j["maps"] = Json::array();
  for (const auto& phi : w.isogenies)
    j["maps"].push_back({{"x_num", phi.x_num.to_string()}, {"x_den", phi.x_den.to_string()}});
  j["torsion"] = {point_json(w.torsion[0]), point_json(w.torsion[1])};

  bool on_curve = true, kernel = true, doubling = true, image = true;
  for (int s = 0; s < 3; ++s) {
    kernel = kernel && w.isogenies[s].apply(origin).is_identity();
    for (int i = 0; i < 5; ++i) {
      Point P = w.curves[s].random_point(rng);
      on_curve = on_curve && w.curves[s + 1].contains(w.isogenies[s].apply(P));
    }
  }
  for (int s = 0; s < 2; ++s) {
    on_curve = on_curve && w.curves[s].contains(w.torsion[s]);
    doubling = doubling && w.curves[s].dbl(w.torsion[s]) == origin;
    image = image && w.isogenies[s].apply(w.torsion[s]) == origin;
  }
  CompositeDegree cd = composite_degree(w);
  bool agrees = composite_agrees(w, rng);
  Json checks = {{"on_curve", on_curve},
                 {"kernel", kernel},
                 {"double_torsion", doubling},
                 {"torsion_image", image},
                 {"composite_degree", cd.degree},
                 {"kernel_x_count", cd.kernel_x_count},
                 {"composite_agrees", agrees}};
  ok = on_curve && kernel && doubling && image && cd.degree == 8 && agrees;
  if (w.variant == ChainVariant::Twisted) {
    auto lam = legendre_sequence(w);
    Json seq = Json::array();
    for (const auto& l : lam) seq.push_back(l.encode());
    bool rec = true;
    for (int i = 0; i < 3; ++i) rec = rec && legendre_step_holds(lam[i], lam[i + 1]);
    checks["legendre"] = seq;
    checks["legendre_recursion"] = rec;
    ok = ok && rec;
  }
  checks["ok"] = ok;
  j["checks"] = checks;
  return j;
}

Outcome cmd_chain(const Flags& f, std::ostream&) {
  GF2Field field = make_field(f.p);
  ChainVariant variant;
  if (f.variant == "standard") variant = ChainVariant::Standard;
  else if (f.variant == "twisted") variant = ChainVariant::Twisted;
  else throw UsageError("--variant must be standard or twisted");
  std::uint64_t seed = effective_seed("chain", f);
  int trials = f.trials > 0 ? f.trials : 1;
  std::mt19937_64 rng(seed);

  Json j;
  j["p"] = f.p;
  j["variant"] = f.variant;
  j["seed"] = seed;
  j["witnesses"] = Json::array();
  long rejected = 0;
  bool all_ok = true;
  for (int t = 0; t < trials; ++t) {
    for (long attempt = 0;; ++attempt) {
      if (attempt > 1000) throw DegenerateSeed("no usable seed after 1000 attempts");
      GF2Elt t3(field, rng() % field.p, rng() % field.p);
      try {
        ChainWitness w = build_chain(field, t3, variant);
        bool ok = true;
        j["witnesses"].push_back(chain_json(w, rng, ok));
        all_ok = all_ok && ok;
        break;
      } catch (const DegenerateSeed&) {
        ++rejected;
      } catch (const NeedsExtension&) {
        ++rejected;
      } catch (const SingularParameter&) {
        ++rejected;
      }
    }
  }
  j["rejected_seeds"] = rejected;
  j["ok"] = all_ok;
  return {dump(j), all_ok};
}

Outcome cmd_models(const Flags& f, std::ostream&) {
  if (f.p % 16 != 1) throw DomainError("models-check needs p = 1 mod 16");
  GF2Field field = make_field(f.p);
  std::uint64_t seed = effective_seed("models-check", f);
  int trials = f.trials > 0 ? f.trials : 100;
  std::mt19937_64 rng(seed);

  Json j;
  j["p"] = f.p;
  j["seed"] = seed;
  j["trials"] = trials;
  j["models"] = Json::array();
  bool ok = true;
  for (int n : {1, 2, 4, 8}) {
    int fermat_pass = 0, weber_pass = 0, singular = 0;
    for (int i = 0; i < trials; ++i) {
      ProjPoint F = random_fermat_point(field, n, rng);
      ProjPoint W = fermat_to_weber(field, n, F);
      bool good = on_model(field, {n, ModelSpec::Kind::Weber}, W);
      ProjPoint back = weber_to_fermat(field, n, W);
      // Off the singular points the inverse is exact; on them only W -> F -> W is.
      if (weber_singular(field, n, W)) {
        ++singular;
        good = good && proj_equal(fermat_to_weber(field, n, back), W);
      } else {
        good = good && proj_equal(back, F);
      }
      fermat_pass += good;

      ProjPoint V = random_weber_point(field, n, rng);
      ProjPoint G = weber_to_fermat(field, n, V);
      weber_pass += on_model(field, {n, ModelSpec::Kind::Fermat}, G) && proj_equal(fermat_to_weber(field, n, G), V);
    }
    bool n_ok = fermat_pass == trials && weber_pass == trials;
    ok = ok && n_ok;
    j["models"].push_back({{"n", n},
                           {"fermat_round_trips", fermat_pass},
                           {"weber_round_trips", weber_pass},
                           {"singular_points", singular},
                           {"ok", n_ok}});
  }
  j["ok"] = ok;
  return {dump(j), ok};
}

// ---------------------------------------------------------------- plumbing

using Handler = Outcome (*)(const Flags&, std::ostream&);

struct Command {
  const char* name;
  const char* help;
  Handler handler;
};

const Command kCommands[] = {
    {"modpoly", "Generate a modular polynomial on an invariant line", cmd_modpoly},
    {"modpoly-verify", "Check a modular polynomial against q-expansions", cmd_modpoly_verify},
    {"qid-check", "Check the Weber-function series identities", cmd_qid},
    {"group-check", "Finite group generated by the Weber action", cmd_group},
    {"ss", "Supersingular isogeny graph on a line", cmd_ss},
    {"split-check", "Splitting of the degree-72 Weber polynomial over F_{p^2}", cmd_split},
    {"hecke", "Hecke operators and the integer eigensystem sieve", cmd_hecke},
    {"chain", "Explicit three-step 2-isogeny chain witness", cmd_chain},
    {"models-check", "Round trips between Weber and Fermat models", cmd_models},
    {"walk", "Random non-backtracking walk in the isogeny graph", cmd_walk},
};

void add_flags(CLI::App* sub, const std::string& name, Flags& f) {
  auto needs = [&](std::initializer_list<const char*> names) {
    return std::find_if(names.begin(), names.end(), [&](const char* n) { return name == n; }) != names.end();
  };
  if (needs({"ss", "split-check", "hecke", "chain", "models-check", "walk"})) {
    auto* o = sub->add_option("--p", f.p, "Odd prime");
    if (name != "split-check") o->required();
  }
  if (name == "split-check") sub->add_option("--p-max", f.p_max, "Check every prime 5 <= p < p-max");
  if (needs({"modpoly", "modpoly-verify", "ss", "walk"})) sub->add_option("--line", f.line, "Invariant line")->required();
  if (name == "hecke") sub->add_option("--line", f.line, "Invariant line (default j)");
  if (needs({"modpoly", "modpoly-verify", "ss", "walk"}))
    sub->add_option("--ell", f.ell, "Prime level")->required()->check(CLI::Range(2, 1000));
  if (name == "hecke") sub->add_option("--ells", f.ells, "Comma-separated primes (default: first four away from 6p)");
  if (needs({"modpoly-verify", "qid-check"})) sub->add_option("--prec", f.prec, "Precision in q^(1/48) steps");
  if (needs({"chain", "models-check", "walk"})) sub->add_option("--seed", f.seed, "64-bit seed (default: hash of flags)");
  if (needs({"chain", "models-check"})) sub->add_option("--trials", f.trials, "Number of samples");
  if (name == "walk") sub->add_option("--length", f.length, "Number of steps");
  if (name == "chain") sub->add_option("--variant", f.variant, "standard or twisted");
  if (needs({"modpoly", "ss"})) sub->add_option("--format", f.format, name == "ss" ? "json or dot" : "text or json");
  if (name == "hecke") sub->add_flag("--timing", f.timing, "Include wall-clock timings");
  if (needs({"modpoly", "modpoly-verify", "ss", "hecke", "walk"})) {
    sub->add_option("--cache-dir", f.cache_dir, "Polynomial cache directory (default $WEBER_CACHE or ./.weber-cache)");
    sub->add_flag("--no-cache", f.no_cache, "Disable the polynomial cache");
  }
  sub->add_option("--out", f.out, "Write the primary output here (atomically)");
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weber modular toolkit", "weber"};
  app.require_subcommand(1);
  Flags flags;
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_flags(sub, c.name, flags);
    subs.emplace_back(sub, &c);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "UsageError", e.what());
    return kUsage;
  }

  const Command* cmd = nullptr;
  for (auto& [sub, c] : subs)
    if (sub->parsed()) cmd = c;

  try {
    Outcome r = cmd->handler(flags, err);
    if (flags.out.empty()) {
      out << r.text;
    } else {
      write_file_atomic(flags.out, r.text);
    }
    return r.ok ? kOk : kVerifyFailed;
  } catch (const UsageError& e) {
    report_error(err, "UsageError", e.what());
    return kUsage;
  } catch (const DomainError& e) {
    report_error(err, e.kind(), e.what());
    return kUsage;
  } catch (const Error& e) {
    report_error(err, e.kind(), e.what());
    return kVerifyFailed;
  } catch (const std::exception& e) {
    report_error(err, "InternalError", e.what());
    return kVerifyFailed;
  }
}

}  // namespace weber::cli
