#include "weber/modpoly.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "weber/error.hpp"
#include "weber/linalg.hpp"

namespace weber {

// ---------------------------------------------------------------------------
// BiPoly

void BiPoly::set(int i, int j, const CycloElt& c) {
  if (c.is_zero()) {
    terms_.erase({i, j});
  } else {
    terms_[{i, j}] = c;
  }
}

void BiPoly::add(int i, int j, const CycloElt& c) {
  if (c.is_zero()) return;
  auto it = terms_.find({i, j});
  if (it == terms_.end()) {
    terms_.emplace(Key{i, j}, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CycloElt BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? CycloElt() : it->second;
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

bool BiPoly::is_rational() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_rational(); });
}

BiPoly BiPoly::swapped() const {
  BiPoly r;
  for (const auto& [k, c] : terms_) r.terms_[{k.second, k.first}] = c;
  return r;
}

BiPoly BiPoly::scaled(const CycloElt& c) const {
  BiPoly r;
  for (const auto& [k, v] : terms_) r.set(k.first, k.second, v * c);
  return r;
}

BiPoly BiPoly::substituted(const CycloElt& cx, const CycloElt& cy, int a) const {
  BiPoly r;
  for (const auto& [k, v] : terms_) r.add(a * k.first, a * k.second, v * cx.pow(k.first) * cy.pow(k.second));
  return r;
}

BiPoly BiPoly::normalized() const {
  if (terms_.empty()) throw DomainError("cannot normalize the zero polynomial");
  int dx = degree_x();
  const CycloElt* lead = nullptr;
  for (const auto& [k, c] : terms_)
    if (k.first == dx) {
      lead = &c;
      break;  // map order: smallest j first
    }
  return scaled(lead->inverse());
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, c);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, -c);
  return r;
}

namespace {

std::string monomial_text(int i, int j) {
  std::string s;
  auto var = [&](char v, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += v;
    if (e > 1) s += "^" + std::to_string(e);
  };
  var('x', i);
  var('y', j);
  return s;
}

}  // namespace

std::string BiPoly::pretty() const {
  if (terms_.empty()) return "0";
  // Highest x-degree first, then by y-degree.
  std::vector<std::pair<Key, CycloElt>> v(terms_.begin(), terms_.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second > b.first.second;
  });
  std::string out;
  for (const auto& [k, c] : v) {
    std::string mono = monomial_text(k.first, k.second);
    if (c.is_rational()) {
      Rational q = c.rational();
      bool neg = q < 0;
      Rational aq = neg ? Rational(-q) : q;
      out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (mono.empty()) {
        out += to_string(aq);
      } else if (aq == 1) {
        out += mono;
      } else {
        out += to_string(aq) + "*" + mono;
      }
    } else {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")";
      if (!mono.empty()) out += "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Series plumbing

namespace {

struct LineSeriesCache {
  std::mutex mu;
  std::unordered_map<std::string, QSeries> series;
};

LineSeriesCache& series_cache() {
  static LineSeriesCache c;
  return c;
}

QSeries cached_line_series(const InvariantLine& line, long prec) {
  auto& cache = series_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.series.find(line.name);
    if (it != cache.series.end() && it->second.precision() >= prec)
      return it->second.truncated(it->second.valuation() + prec);
  }
  QSeries s = line_series(line, prec);
  std::lock_guard<std::mutex> lock(cache.mu);
  auto& slot = cache.series[line.name];
  if (slot.precision() < s.precision()) slot = s;
  return s;
}

/// A series c * q^v * sum a_k q^(g k) with integer a_k.
struct GridSeries {
  CycloElt scale;
  long valuation = 0;
  long step = 1;
  std::vector<Integer> a;
};

long grid_step(const QSeries& s) {
  long g = 0;
  for (std::size_t k = 1; k < s.coeffs().size(); ++k)
    if (!s.coeffs()[k].is_zero()) g = std::gcd(g, static_cast<long>(k));
  return g == 0 ? 48 : g;
}

GridSeries to_grid(const QSeries& s, long step) {
  GridSeries out;
  out.scale = s.leading();
  out.valuation = s.valuation();
  out.step = step;
  const CycloElt inv = out.scale.inverse();
  for (std::size_t k = 0; k < s.coeffs().size(); ++k) {
    const CycloElt& c = s.coeffs()[k];
    if (k % static_cast<std::size_t>(step) != 0) {
      if (!c.is_zero()) throw InternalError("series support is not on the expected grid");
      continue;
    }
    CycloElt r = c.is_zero() ? CycloElt() : c * inv;
    if (!r.is_rational() || r.rational().get_den() != 1)
      throw ConsistencyError("normalized line series is not integral; cannot assemble an integer system");
    out.a.push_back(r.rational().get_num());
  }
  return out;
}

using IntSeries = std::vector<Integer>;

IntSeries mul_trunc(const IntSeries& x, const IntSeries& y, std::size_t n) {
  IntSeries r(std::min(n, x.size() + y.size() - 1), Integer(0));
  std::vector<std::size_t> ny;
  for (std::size_t j = 0; j < y.size(); ++j)
    if (y[j] != 0) ny.push_back(j);
  for (std::size_t i = 0; i < x.size() && i < r.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j : ny) {
      if (i + j >= r.size()) break;
      mpz_addmul(r[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }
  return r;
}

struct Monomial {
  int i, j;
  long base;  // exponent of the leading term, q^(1/48) units
};

bool descended_case(const InvariantLine& line, int ell) {
  return (line.name == "t" && ell == 2) || (line.name == "x24" && (ell == 2 || ell == 3));
}

}  // namespace

QSeries correspondence_partner(const InvariantLine& line, int ell, const QSeries& base) {
  // The level-2 relation on the f-line pairs f(tau) with f(2 tau - 3);
  // pairing with f(2 tau) gives a different correspondence of degree 32.
  if (line.name == "x24" && ell == 2) return substitute_qpower(shift_tau(base, -3), 2);
  return substitute_qpower(base, ell);
}

// ---------------------------------------------------------------------------
// Generation

namespace {

struct BlockResult {
  std::vector<Monomial> monomials;
  std::vector<linalg::RatVector> kernel;
};

// Solve one residue-class block. Returns the kernel basis.
std::vector<linalg::RatVector> solve_block(const std::vector<Monomial>& mons, const GridSeries& s,
                                           const GridSeries& t, long extra) {
  long bmin = mons.front().base, bmax = mons.front().base;
  for (const auto& m : mons) {
    bmin = std::min(bmin, m.base);
    bmax = std::max(bmax, m.base);
  }
  const long g = s.step;
  const std::size_t span = static_cast<std::size_t>((bmax - bmin) / g);
  const std::size_t nrows = mons.size() + span + static_cast<std::size_t>(extra);
  if (s.a.size() < nrows || t.a.size() < nrows)
    throw InternalError("line series too short for the requested system");

  int dx = 0, dy = 0;
  for (const auto& m : mons) {
    dx = std::max(dx, m.i);
    dy = std::max(dy, m.j);
  }
  IntSeries base(s.a.begin(), s.a.begin() + static_cast<long>(nrows));
  IntSeries tbase(t.a.begin(), t.a.begin() + static_cast<long>(nrows));
  std::vector<IntSeries> sp(static_cast<std::size_t>(dx) + 1), tp(static_cast<std::size_t>(dy) + 1);
  sp[0] = IntSeries{Integer(1)};
  tp[0] = IntSeries{Integer(1)};
  for (int i = 1; i <= dx; ++i) sp[i] = mul_trunc(sp[i - 1], base, nrows);
  for (int j = 1; j <= dy; ++j) tp[j] = mul_trunc(tp[j - 1], tbase, nrows);

  linalg::IntMatrix m(nrows, std::vector<Integer>(mons.size(), Integer(0)));
  for (std::size_t c = 0; c < mons.size(); ++c) {
    const auto& mo = mons[c];
    std::size_t off = static_cast<std::size_t>((mo.base - bmin) / g);
    if (off >= nrows) continue;
    IntSeries prod = mul_trunc(sp[mo.i], tp[mo.j], nrows - off);
    for (std::size_t k = 0; k < prod.size(); ++k) m[off + k][c] = prod[k];
  }
  if (linalg::nullity_mod(m, mons.size(), linalg::word_prime(0)) == 0) return {};
  return linalg::rational_nullspace(m, mons.size());
}

std::optional<BiPoly> try_degree(const InvariantLine& line, int ell, int degree, const GenerateOptions& opts,
                                 bool sparsity) {
  QSeries probe = cached_line_series(line, 48 * 16);
  QSeries probe_y = correspondence_partner(line, ell, probe);
  const long g = grid_step(probe);
  const long v = probe.valuation();
  const long w = probe_y.valuation();
  if (grid_step(probe_y) % g != 0)
    throw InternalError("partner series is not on the grid of the line series");

  std::map<long, std::vector<Monomial>> blocks;
  const long target_class = (((ell + 1) * v) % g + g) % g;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; j <= degree; ++j) {
      long b = i * v + j * w;
      long cls = ((b % g) + g) % g;
      if (sparsity && cls != target_class) continue;
      blocks[cls].push_back({i, j, b});
    }

  for (long extra = opts.extra_equations;; extra *= 2) {
    std::size_t need = 0;
    for (const auto& [cls, mons] : blocks) {
      long bmin = mons.front().base, bmax = mons.front().base;
      for (const auto& m : mons) {
        bmin = std::min(bmin, m.base);
        bmax = std::max(bmax, m.base);
      }
      need = std::max(need, mons.size() + static_cast<std::size_t>((bmax - bmin) / g + extra));
    }
    QSeries x = cached_line_series(line, static_cast<long>(need) * g + 1);
    GridSeries grid = to_grid(x, g);
    GridSeries grid_y = to_grid(correspondence_partner(line, ell, x).truncated(w + static_cast<long>(need) * g), g);

    std::vector<BlockResult> found;
    for (const auto& [cls, mons] : blocks) {
      auto ker = solve_block(mons, grid, grid_y, extra);
      if (!ker.empty()) found.push_back({mons, std::move(ker)});
    }
    if (found.empty()) return std::nullopt;
    bool ambiguous = found.size() > 1 || found.front().kernel.size() > 1;
    if (ambiguous) {
      if (extra >= opts.extra_equations * 8)
        throw AmbiguityError("relation space for " + line.name + " at ell=" + std::to_string(ell) +
                             " has dimension > 1 at the working precision");
      continue;
    }
    const auto& res = found.front();
    const CycloElt cinv = grid.scale.inverse();
    const CycloElt dinv = grid_y.scale.inverse();
    BiPoly p;
    for (std::size_t c = 0; c < res.monomials.size(); ++c) {
      const Rational& a = res.kernel.front()[c];
      if (a == 0) continue;
      const auto& mo = res.monomials[c];
      p.set(mo.i, mo.j, CycloElt(a) * cinv.pow(mo.i) * dinv.pow(mo.j));
    }
    return p.normalized();
  }
}

}  // namespace

BiPoly generate(const InvariantLine& line, int ell, const GenerateOptions& opts) {
  if (ell < 2 || !linalg::is_prime(static_cast<std::uint64_t>(ell)))
    throw DomainError("ell must be prime, got " + std::to_string(ell));
  if (line.obstructs(ell)) {
    if (!descended_case(line, ell))
      throw DomainError("ell=" + std::to_string(ell) + " divides the level of line " + line.name);
    for (int d = 1; d <= 48; ++d) {
      auto p = try_degree(line, ell, d, opts, false);
      if (p) return *p;
    }
    throw ConsistencyError("no relation of degree <= 48 found for " + line.name);
  }
  bool sparsity = opts.use_sparsity && line.sparsity_modulus.has_value();
  auto p = try_degree(line, ell, ell + 1, opts, sparsity);
  if (!p) throw ConsistencyError("no modular relation found in the degree box for " + line.name);
  return *p;
}

// ---------------------------------------------------------------------------
// Verification and structural checks

long default_verify_precision(const InvariantLine& line, int ell, const BiPoly& poly) {
  QSeries probe = cached_line_series(line, 48 * 4);
  const long v = probe.valuation();
  const long w = correspondence_partner(line, ell, probe).valuation();
  long bmin = 0;
  for (const auto& [k, c] : poly.terms()) bmin = std::min(bmin, k.first * v + k.second * w);
  return -bmin + 48L * (ell + 1) * (ell + 1) / 24 + 96;
}

VerifyReport verify(const BiPoly& poly, const InvariantLine& line, int ell, long prec) {
  if (prec <= 0) prec = default_verify_precision(line, ell, poly);
  QSeries x = cached_line_series(line, prec);
  QSeries y = correspondence_partner(line, ell, x);
  std::vector<QSeries> xp{QSeries::constant(CycloElt(1L), prec)};
  std::vector<QSeries> yp{QSeries::constant(CycloElt(1L), prec)};
  for (int i = 1; i <= poly.degree_x(); ++i) xp.push_back(xp.back() * x);
  for (int j = 1; j <= poly.degree_y(); ++j) yp.push_back(yp.back() * y);
  std::optional<QSeries> acc;
  for (const auto& [k, c] : poly.terms()) {
    QSeries t = xp[static_cast<std::size_t>(k.first)] * yp[static_cast<std::size_t>(k.second)] * c;
    acc = acc ? *acc + t : t;
  }
  VerifyReport r;
  if (!acc) {
    r.vanishes = true;
    r.precision = prec;
    return r;
  }
  r.precision = acc->abs_precision();
  r.vanishes = acc->is_zero();
  if (!r.vanishes) {
    r.first_nonzero_exponent = acc->valuation();
    r.first_nonzero_coeff = acc->leading().to_string();
  }
  return r;
}

bool check_sparsity(const BiPoly& poly, int ell) {
  for (const auto& [k, c] : poly.terms()) {
    long lhs = k.first + static_cast<long>(ell) * k.second;
    if (((lhs - (ell + 1)) % 24 + 24) % 24 != 0) return false;
  }
  return true;
}

bool check_transform(const BiPoly& poly, int ell) {
  BiPoly lhs = poly.substituted(root_of_unity(24, 1), root_of_unity(24, ell));
  return lhs == poly.scaled(root_of_unity(24, ell + 1));
}

bool is_symmetric(const BiPoly& poly) { return poly == poly.swapped(); }

// ---------------------------------------------------------------------------
// Builtins

namespace {

BiPoly from_list(std::initializer_list<std::tuple<int, int, const char*>> terms) {
  BiPoly p;
  for (const auto& [i, j, c] : terms) p.set(i, j, CycloElt(Rational(parse_rational(c))));
  return p;
}

}  // namespace

BiPoly builtin(std::string_view name) {
  if (name == "phi2_j") {
    return from_list({{3, 0, "1"},
                      {2, 2, "-1"},
                      {0, 3, "1"},
                      {2, 1, "1488"},
                      {1, 2, "1488"},
                      {2, 0, "-162000"},
                      {0, 2, "-162000"},
                      {1, 1, "40773375"},
                      {1, 0, "8748000000"},
                      {0, 1, "8748000000"},
                      {0, 0, "-157464000000000"}});
  }
  if (name == "psi2") return from_list({{2, 1, "1"}, {0, 2, "-1"}, {1, 0, "16"}});
  if (name == "psi3") return from_list({{4, 0, "1"}, {3, 3, "-1"}, {1, 1, "8"}, {0, 4, "1"}});
  if (name == "phi5") return from_list({{6, 0, "1"}, {5, 5, "-1"}, {1, 1, "4"}, {0, 6, "1"}});
  if (name == "phi7")
    return from_list({{8, 0, "1"}, {7, 7, "-1"}, {4, 4, "7"}, {1, 1, "-8"}, {0, 8, "1"}});
  if (name == "phi11")
    return from_list({{12, 0, "1"},
                      {11, 11, "-1"},
                      {9, 9, "11"},
                      {7, 7, "-44"},
                      {5, 5, "88"},
                      {3, 3, "-88"},
                      {1, 1, "32"},
                      {0, 12, "1"}});
  if (name == "phi13")
    return from_list({{14, 0, "1"},
                      {13, 13, "-1"},
                      {12, 2, "13"},
                      {10, 4, "52"},
                      {8, 6, "78"},
                      {6, 8, "78"},
                      {4, 10, "52"},
                      {2, 12, "13"},
                      {1, 1, "64"},
                      {0, 14, "1"}});
  throw DomainError("unknown builtin polynomial: " + std::string(name));
}

std::optional<std::string> builtin_name_for(const InvariantLine& line, int ell) {
  if (line.name == "j" && ell == 2) return "phi2_j";
  if (line.name == "t" && ell == 2) return "psi2";
  if (line.name == "r" && ell == 3) return "psi3";
  if (line.name == "x24" && (ell == 5 || ell == 7 || ell == 11 || ell == 13)) return "phi" + std::to_string(ell);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// File format

std::string serialize(const BiPoly& poly, const std::string& line, int ell) {
  std::ostringstream os;
  os << "# line=" << line << " ell=" << ell << " norm=monic-x\n";
  for (const auto& [k, c] : poly.terms()) os << k.first << ' ' << k.second << ' ' << c.to_string() << '\n';
  return os.str();
}

ParsedPoly parse_poly_file(std::string_view text) {
  ParsedPoly out;
  std::istringstream is{std::string(text)};
  std::string header;
  if (!std::getline(is, header)) throw IOError("empty polynomial file");
  {
    std::istringstream hs(header);
    std::string hash, lf, ef, nf;
    hs >> hash >> lf >> ef >> nf;
    if (hash != "#" || lf.rfind("line=", 0) != 0 || ef.rfind("ell=", 0) != 0 || nf != "norm=monic-x")
      throw IOError("malformed polynomial file header: " + header);
    out.line = lf.substr(5);
    try {
      out.ell = std::stoi(ef.substr(4));
    } catch (const std::exception&) {
      throw IOError("malformed ell in header: " + header);
    }
  }
  std::string row;
  std::optional<BiPoly::Key> prev;
  while (std::getline(is, row)) {
    if (row.empty()) continue;
    std::istringstream rs(row);
    int i, j;
    if (!(rs >> i >> j)) throw IOError("malformed polynomial row: " + row);
    std::string rest;
    std::getline(rs, rest);
    auto first = rest.find_first_not_of(' ');
    if (first == std::string::npos) throw IOError("missing coefficient: " + row);
    CycloElt c;
    try {
      c = CycloElt::parse(rest.substr(first));
    } catch (const Error& e) {
      throw IOError(std::string("bad coefficient: ") + e.what());
    }
    BiPoly::Key key{i, j};
    if (prev && !(*prev < key)) throw IOError("polynomial rows are not strictly sorted");
    if (c.is_zero()) throw IOError("zero coefficient stored: " + row);
    prev = key;
    out.poly.set(i, j, c);
  }
  return out;
}

}  // namespace weber
