#include "weber/linalg.hpp"

#include <algorithm>
#include <mutex>

#include "weber/error.hpp"

namespace weber::linalg {

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("inverse of zero modulo p");
  return powmod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit inputs.
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (a % n == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t word_prime(std::size_t k) {
  static std::mutex mu;
  static std::vector<std::uint64_t> cache;
  std::lock_guard<std::mutex> lock(mu);
  std::uint64_t candidate = cache.empty() ? (1ULL << 62) - 1 : cache.back() - 2;
  while (cache.size() <= k) {
    while (!is_prime(candidate)) candidate -= 2;
    cache.push_back(candidate);
    candidate -= 2;
  }
  return cache[k];
}

std::uint64_t reduce(const Integer& v, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long required");
  return mpz_fdiv_ui(v.get_mpz_t(), p);
}

std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
  Integer r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

ModEchelon echelon_mod(std::vector<std::vector<std::uint64_t>> a, std::size_t ncols, std::uint64_t p) {
  ModEchelon out;
  std::size_t rank = 0;
  const std::size_t m = a.size();
  for (std::size_t c = 0; c < ncols && rank < m; ++c) {
    std::size_t piv = rank;
    while (piv < m && a[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[rank]);
    auto& prow = a[rank];
    std::uint64_t inv = invmod(prow[c], p);
    for (std::size_t k = c; k < ncols; ++k)
      if (prow[k]) prow[k] = mulmod(prow[k], inv, p);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      std::uint64_t f = p - a[r][c];
      auto& row = a[r];
      for (std::size_t k = c; k < ncols; ++k) {
        if (prow[k] == 0) continue;
        std::uint64_t v = row[k] + mulmod(f, prow[k], p);
        row[k] = v >= p ? v - p : v;
      }
    }
    out.pivots.push_back(c);
    ++rank;
  }
  a.resize(rank);
  out.rows = std::move(a);
  return out;
}

ModEchelon echelon_mod(const IntMatrix& a, std::size_t ncols, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> m(a.size(), std::vector<std::uint64_t>(ncols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) m[i][j] = reduce(a[i][j], p);
  return echelon_mod(std::move(m), ncols, p);
}

std::size_t nullity_mod(const IntMatrix& a, std::size_t ncols, std::uint64_t p) {
  return ncols - echelon_mod(a, ncols, p).pivots.size();
}

namespace {

bool kernel_vector_ok(const IntMatrix& a, const RatVector& v) {
  Integer lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> w(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) w[j] = v[j].get_num() * (lcm / v[j].get_den());
  for (const auto& row : a) {
    Integer acc = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (w[j] != 0 && row[j] != 0) acc += row[j] * w[j];
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<RatVector> rational_nullspace(const IntMatrix& a, std::size_t ncols) {
  std::vector<std::size_t> best_pivots;
  bool have_best = false;
  std::vector<Integer> residues;  // CRT images of the kernel entries
  Integer modulus = 1;
  std::vector<RatVector> previous;

  for (std::size_t k = 0; k < 4000; ++k) {
    const std::uint64_t p = word_prime(k);
    ModEchelon e = echelon_mod(a, ncols, p);
    if (e.pivots.size() == ncols) return {};
    if (have_best) {
      if (e.pivots.size() < best_pivots.size()) continue;
      bool better = e.pivots.size() > best_pivots.size() ||
                    std::lexicographical_compare(e.pivots.begin(), e.pivots.end(), best_pivots.begin(),
                                                 best_pivots.end());
      if (better) {
        have_best = false;  // restart accumulation on the better reduction
      } else if (e.pivots != best_pivots) {
        continue;
      }
    }
    std::vector<std::size_t> free_cols;
    {
      std::size_t pi = 0;
      for (std::size_t c = 0; c < ncols; ++c) {
        if (pi < e.pivots.size() && e.pivots[pi] == c) {
          ++pi;
        } else {
          free_cols.push_back(c);
        }
      }
    }
    const std::size_t rank = e.pivots.size();
    std::vector<std::uint64_t> img(rank * free_cols.size());
    for (std::size_t r = 0; r < rank; ++r)
      for (std::size_t f = 0; f < free_cols.size(); ++f) {
        std::uint64_t v = e.rows[r][free_cols[f]];
        img[r * free_cols.size() + f] = v == 0 ? 0 : p - v;
      }
    if (!have_best) {
      have_best = true;
      best_pivots = e.pivots;
      residues.assign(img.size(), Integer(0));
      for (std::size_t i = 0; i < img.size(); ++i) residues[i] = static_cast<unsigned long>(img[i]);
      modulus = static_cast<unsigned long>(p);
      previous.clear();
    } else {
      // x = r + M * ((v - r) * M^{-1} mod p)
      std::uint64_t minv = invmod(reduce(modulus, p), p);
      for (std::size_t i = 0; i < img.size(); ++i) {
        std::uint64_t r = reduce(residues[i], p);
        std::uint64_t d = img[i] >= r ? img[i] - r : img[i] + p - r;
        std::uint64_t t = mulmod(d, minv, p);
        residues[i] += modulus * static_cast<unsigned long>(t);
      }
      modulus *= static_cast<unsigned long>(p);
    }

    std::vector<RatVector> basis(free_cols.size(), RatVector(ncols, Rational(0)));
    bool ok = true;
    for (std::size_t f = 0; f < free_cols.size() && ok; ++f) {
      basis[f][free_cols[f]] = 1;
      for (std::size_t r = 0; r < rank; ++r) {
        auto q = rational_reconstruct(residues[r * free_cols.size() + f], modulus);
        if (!q) {
          ok = false;
          break;
        }
        basis[f][best_pivots[r]] = *q;
      }
    }
    if (!ok) {
      previous.clear();
      continue;
    }
    if (basis == previous) {
      bool verified = true;
      for (const auto& v : basis)
        if (!kernel_vector_ok(a, v)) {
          verified = false;
          break;
        }
      if (verified) return basis;
    }
    previous = std::move(basis);
  }
  throw InternalError("rational_nullspace: multimodular reconstruction did not stabilise");
}

}  // namespace weber::linalg
