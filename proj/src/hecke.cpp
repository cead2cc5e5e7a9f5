#include "weber/hecke.hpp"

#include <cmath>
#include <numeric>

#include "weber/error.hpp"

namespace weber {

using linalg::IntMatrix;
using linalg::RatVector;

HeckeOp hecke_matrix(const SSGraph& g) {
  HeckeOp op;
  op.ell = g.ell;
  op.m.assign(g.nodes.size(), std::vector<long>(g.nodes.size(), 0));
  for (const auto& e : g.edges) op.m[e.dst][e.src] += e.mult;
  return op;
}

namespace {

std::vector<std::vector<long>> mul(const HeckeOp& a, const HeckeOp& b) {
  const std::size_t n = a.dim();
  std::vector<std::vector<long>> r(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a.m[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a.m[i][k] * b.m[k][j];
    }
  return r;
}

// Integer columns spanning the current subspace, stored as vectors.
using Basis = std::vector<std::vector<Integer>>;

Basis to_integer_basis(const std::vector<RatVector>& vs) {
  Basis out;
  for (const auto& v : vs) {
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    Integer g = 0;
    std::vector<Integer> w;
    for (const auto& x : v) {
      Integer y = x.get_num() * (l / x.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
      w.push_back(y);
    }
    if (g > 1)
      for (auto& y : w) y /= g;
    out.push_back(std::move(w));
  }
  return out;
}

// (T - a) B as an n x k integer matrix.
IntMatrix restricted(const HeckeOp& t, long a, const Basis& B) {
  const std::size_t n = t.dim(), k = B.size();
  IntMatrix r(n, std::vector<Integer>(k, 0));
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < n; ++i) {
      Integer acc = -a * B[c][i];
      for (std::size_t j = 0; j < n; ++j)
        if (t.m[i][j]) acc += t.m[i][j] * B[c][j];
      r[i][c] = acc;
    }
  return r;
}

void sieve(const std::vector<HeckeOp>& ops, std::size_t depth, const Basis& B, std::map<int, long>& chosen,
           std::vector<Eigensystem>& out) {
  if (depth == ops.size()) {
    Eigensystem s;
    s.eigenvalues = chosen;
    s.dim = B.size();
    for (const auto& v : B) {
      RatVector r;
      for (const auto& x : v) r.emplace_back(x);
      s.basis.push_back(std::move(r));
    }
    s.eisenstein = true;
    for (const auto& [l, a] : chosen)
      if (a != l + 1) s.eisenstein = false;
    out.push_back(std::move(s));
    return;
  }
  const HeckeOp& t = ops[depth];
  long bound = static_cast<long>(std::floor(2.0 * std::sqrt(static_cast<double>(t.ell))));
  while ((bound + 1) * (bound + 1) <= 4L * t.ell) ++bound;
  while (bound * bound > 4L * t.ell) --bound;
  std::vector<long> candidates;
  for (long a = -bound; a <= bound; ++a) candidates.push_back(a);
  if (t.ell + 1 > bound) candidates.push_back(t.ell + 1);
  for (long a : candidates) {
    IntMatrix m = restricted(t, a, B);
    if (linalg::nullity_mod(m, B.size(), linalg::word_prime(0)) == 0) continue;
    auto ker = linalg::rational_nullspace(m, B.size());
    if (ker.empty()) continue;
    // New basis: B * c for each kernel vector c.
    std::vector<RatVector> nb;
    for (const auto& c : ker) {
      RatVector v(t.dim(), Rational(0));
      for (std::size_t j = 0; j < B.size(); ++j)
        if (c[j] != 0)
          for (std::size_t i = 0; i < t.dim(); ++i) v[i] += c[j] * B[j][i];
      nb.push_back(std::move(v));
    }
    chosen[t.ell] = a;
    sieve(ops, depth + 1, to_integer_basis(nb), chosen, out);
    chosen.erase(t.ell);
  }
}

}  // namespace

bool commute_check(const HeckeOp& a, const HeckeOp& b) {
  if (a.dim() != b.dim()) throw DomainError("Hecke operators act on different bases");
  return mul(a, b) == mul(b, a);
}

bool eisenstein_left_check(const HeckeOp& a) {
  for (std::size_t j = 0; j < a.dim(); ++j) {
    long s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a.m[i][j];
    if (s != a.ell + 1) return false;
  }
  return true;
}

std::vector<Eigensystem> eigen_sieve(const std::vector<HeckeOp>& ops, bool exclude_eisenstein) {
  if (ops.empty()) return {};
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      if (!commute_check(ops[i], ops[j]))
        throw DomainError("T_" + std::to_string(ops[i].ell) + " and T_" + std::to_string(ops[j].ell) + " do not commute");
  const std::size_t n = ops[0].dim();
  Basis B(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) B[i][i] = 1;
  std::map<int, long> chosen;
  std::vector<Eigensystem> out;
  sieve(ops, 0, B, chosen, out);
  if (exclude_eisenstein) std::erase_if(out, [](const Eigensystem& s) { return s.eisenstein; });
  return out;
}

bool within_hasse(const Eigensystem& s) {
  for (const auto& [l, a] : s.eigenvalues)
    if (a * a > 4L * l) return false;
  return true;
}

int quadratic_character_24(int index, long n) {
  long r = ((n % 24) + 24) % 24;
  if (std::gcd(r, 24L) != 1) return 0;
  int v = 1;
  if (index & 1) v *= (r % 4 == 1) ? 1 : -1;
  if (index & 2) v *= (r % 8 == 1 || r % 8 == 7) ? 1 : -1;
  if (index & 4) v *= (r % 3 == 1) ? 1 : -1;
  return v;
}

std::vector<TwistOrbit> twist_orbits(const std::vector<Eigensystem>& systems, const InvariantLine& line) {
  if (line.fiber_action_order <= 1) throw DomainError("line " + line.name + " has no roots-of-unity fibre action");
  const std::size_t n = systems.size();
  std::vector<int> orbit_of(n, -1);
  std::vector<TwistOrbit> orbits;
  auto related = [&](const Eigensystem& a, const Eigensystem& b) -> int {
    for (int chi = 0; chi < 8; ++chi) {
      bool ok = a.eigenvalues.size() == b.eigenvalues.size();
      for (const auto& [l, x] : a.eigenvalues) {
        auto it = b.eigenvalues.find(l);
        if (it == b.eigenvalues.end() || it->second != quadratic_character_24(chi, l) * x) {
          ok = false;
          break;
        }
      }
      if (ok) return chi;
    }
    return -1;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (orbit_of[i] >= 0) continue;
    TwistOrbit o;
    o.members.push_back(i);
    o.characters.push_back(0);
    orbit_of[i] = static_cast<int>(orbits.size());
    for (std::size_t j = i + 1; j < n; ++j) {
      if (orbit_of[j] >= 0) continue;
      int chi = related(systems[i], systems[j]);
      if (chi >= 0) {
        o.members.push_back(j);
        o.characters.push_back(chi);
        orbit_of[j] = orbit_of[i];
      }
    }
    std::size_t sz = o.members.size();
    o.ambiguous = !(sz == 1 || sz == 2 || sz == 4);
    orbits.push_back(std::move(o));
  }
  return orbits;
}

std::vector<int> default_hecke_primes(std::uint64_t p, std::size_t count) {
  std::vector<int> out;
  for (int l = 5; out.size() < count; l += 2) {
    if (!linalg::is_prime(static_cast<std::uint64_t>(l)) || static_cast<std::uint64_t>(l) == p) continue;
    out.push_back(l);
  }
  return out;
}

}  // namespace weber
