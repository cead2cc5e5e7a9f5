#include "weber/gf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <mutex>
#include <random>

#include "weber/error.hpp"
#include "weber/linalg.hpp"

namespace weber {

namespace {

inline std::uint64_t mmul(std::uint64_t x, std::uint64_t y, std::uint64_t p) { return (x * y) % p; }
inline std::uint64_t madd(std::uint64_t x, std::uint64_t y, std::uint64_t p) {
  std::uint64_t s = x + y;
  return s >= p ? s - p : s;
}
inline std::uint64_t msub(std::uint64_t x, std::uint64_t y, std::uint64_t p) { return x >= y ? x - y : x + p - y; }

std::uint64_t mpow(std::uint64_t x, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  x %= p;
  while (e) {
    if (e & 1) r = mmul(r, x, p);
    x = mmul(x, x, p);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

void check_same_field(std::uint64_t p1, std::uint64_t p2) {
  if (p1 != p2) throw DomainError("mixing elements of different fields");
}

}  // namespace

std::string GF2Field::header() const { return "p=" + std::to_string(p) + " d=" + std::to_string(d); }

GF2Field make_field(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !linalg::is_prime(p)) throw DomainError("p must be an odd prime, got " + std::to_string(p));
  if (p >= (1ULL << 31)) throw DomainError("p must be below 2^31");
  std::uint64_t d = 2;
  while (mpow(d, (p - 1) / 2, p) != p - 1) ++d;
  return {p, d};
}

GF2Elt::GF2Elt(const GF2Field& f, std::uint64_t a, std::uint64_t b) : a_(a % f.p), b_(b % f.p), p_(f.p), d_(f.d) {}

GF2Elt GF2Elt::from_int(const GF2Field& f, long v) {
  long r = v % static_cast<long>(f.p);
  if (r < 0) r += static_cast<long>(f.p);
  return GF2Elt(f, static_cast<std::uint64_t>(r));
}

GF2Elt GF2Elt::from_integer(const GF2Field& f, const Integer& v) { return GF2Elt(f, linalg::reduce(v, f.p)); }

GF2Elt GF2Elt::from_rational(const GF2Field& f, const Rational& v) {
  GF2Elt den = from_integer(f, v.get_den());
  if (den.is_zero()) throw DomainError("rational " + to_string(v) + " has denominator divisible by p");
  return from_integer(f, v.get_num()) / den;
}

GF2Elt GF2Elt::operator+(const GF2Elt& o) const {
  check_same_field(p_, o.p_);
  GF2Elt r = *this;
  r.a_ = madd(a_, o.a_, p_);
  r.b_ = madd(b_, o.b_, p_);
  return r;
}

GF2Elt GF2Elt::operator-(const GF2Elt& o) const {
  check_same_field(p_, o.p_);
  GF2Elt r = *this;
  r.a_ = msub(a_, o.a_, p_);
  r.b_ = msub(b_, o.b_, p_);
  return r;
}

GF2Elt GF2Elt::operator-() const {
  GF2Elt r = *this;
  r.a_ = a_ ? p_ - a_ : 0;
  r.b_ = b_ ? p_ - b_ : 0;
  return r;
}

GF2Elt GF2Elt::operator*(const GF2Elt& o) const {
  check_same_field(p_, o.p_);
  GF2Elt r = *this;
  std::uint64_t bb = mmul(mmul(b_, o.b_, p_), d_, p_);
  r.a_ = madd(mmul(a_, o.a_, p_), bb, p_);
  r.b_ = madd(mmul(a_, o.b_, p_), mmul(b_, o.a_, p_), p_);
  return r;
}

GF2Elt GF2Elt::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in F_p^2");
  // (a + bu)^-1 = (a - bu) / (a^2 - d b^2)
  std::uint64_t norm = msub(mmul(a_, a_, p_), mmul(mmul(b_, b_, p_), d_, p_), p_);
  std::uint64_t ninv = mpow(norm, p_ - 2, p_);
  GF2Elt r = *this;
  r.a_ = mmul(a_, ninv, p_);
  r.b_ = mmul(b_ ? p_ - b_ : 0, ninv, p_);
  return r;
}

GF2Elt GF2Elt::operator/(const GF2Elt& o) const { return *this * o.inverse(); }

GF2Elt GF2Elt::pow(std::uint64_t e) const {
  GF2Elt r(field(), 1), x = *this;
  while (e) {
    if (e & 1) r = r * x;
    x = x * x;
    e >>= 1;
  }
  return r;
}

GF2Elt GF2Elt::pow_signed(long e) const {
  if (e < 0) return inverse().pow(static_cast<std::uint64_t>(-e));
  return pow(static_cast<std::uint64_t>(e));
}

GF2Elt GF2Elt::frobenius() const {
  GF2Elt r = *this;
  r.b_ = b_ ? p_ - b_ : 0;
  return r;
}

std::string GF2Elt::encode() const { return std::to_string(a_) + "+" + std::to_string(b_) + "*u"; }

GF2Elt GF2Elt::decode(const GF2Field& f, std::string_view text) {
  std::string s(text);
  auto plus = s.find('+');
  auto star = s.find("*u");
  if (plus == std::string::npos || star == std::string::npos || star + 2 != s.size() || star < plus)
    throw DomainError("bad F_p^2 element: '" + s + "'");
  try {
    std::size_t used = 0;
    std::uint64_t a = std::stoull(s.substr(0, plus), &used);
    if (used != plus) throw DomainError("bad F_p^2 element: '" + s + "'");
    std::uint64_t b = std::stoull(s.substr(plus + 1, star - plus - 1), &used);
    if (used != star - plus - 1) throw DomainError("bad F_p^2 element: '" + s + "'");
    if (a >= f.p || b >= f.p) throw DomainError("F_p^2 element out of range: '" + s + "'");
    return GF2Elt(f, a, b);
  } catch (const std::logic_error&) {
    throw DomainError("bad F_p^2 element: '" + s + "'");
  }
}

GF2Elt zero(const GF2Field& f) { return GF2Elt(f, 0); }
GF2Elt one(const GF2Field& f) { return GF2Elt(f, 1); }

bool is_square(const GF2Elt& x) {
  if (x.is_zero()) return true;
  std::uint64_t q = x.p() * x.p();
  return x.pow((q - 1) / 2).is_one();
}

namespace {

// First element in (b, a) scan order that is a non-square in F_p^2.
GF2Elt canonical_nonsquare(const GF2Field& f) {
  for (std::uint64_t b = 1;; ++b)
    for (std::uint64_t a = 0; a < f.p; ++a) {
      GF2Elt z(f, a, b);
      if (!is_square(z)) return z;
    }
}

}  // namespace

std::optional<GF2Elt> sqrt(const GF2Elt& x) {
  if (x.is_zero()) return x;
  if (!is_square(x)) return std::nullopt;
  const GF2Field f = x.field();
  const std::uint64_t q = f.p * f.p;
  std::uint64_t t = q - 1;
  int s = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  GF2Elt z = canonical_nonsquare(f);
  GF2Elt c = z.pow(t);
  GF2Elt r = x.pow((t + 1) / 2);
  GF2Elt tt = x.pow(t);
  int m = s;
  while (!tt.is_one()) {
    int i = 0;
    GF2Elt w = tt;
    while (!w.is_one()) {
      w = w * w;
      ++i;
    }
    GF2Elt bpow = c;
    for (int k = 0; k < m - i - 1; ++k) bpow = bpow * bpow;
    r = r * bpow;
    c = bpow * bpow;
    tt = tt * c;
    m = i;
  }
  GF2Elt neg = -r;
  return neg < r ? neg : r;
}

GF2Elt nth_root_of_unity(const GF2Field& f, std::uint64_t n) {
  const std::uint64_t q1 = f.p * f.p - 1;
  if (n == 0 || q1 % n != 0) throw DomainError(std::to_string(n) + " does not divide p^2 - 1");
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, std::uint64_t>, GF2Elt> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({f.p, n});
    if (it != cache.end()) return it->second;
  }
  // Primitive element: first in (b, a) order whose order is q - 1.
  std::vector<std::uint64_t> fac = prime_factors(f.p - 1);
  for (auto r : prime_factors(f.p + 1)) fac.push_back(r);
  std::sort(fac.begin(), fac.end());
  fac.erase(std::unique(fac.begin(), fac.end()), fac.end());
  GF2Elt g;
  bool found = false;
  for (std::uint64_t b = 0; b < f.p && !found; ++b)
    for (std::uint64_t a = 0; a < f.p && !found; ++a) {
      GF2Elt c(f, a, b);
      if (c.is_zero()) continue;
      bool prim = true;
      for (auto r : fac)
        if (c.pow(q1 / r).is_one()) {
          prim = false;
          break;
        }
      if (prim) {
        g = c;
        found = true;
      }
    }
  GF2Elt zeta = g.pow(q1 / n);
  // Smallest generator of the order-n subgroup, prime-field elements first.
  GF2Elt best = zeta;
  GF2Elt cur = one(f);
  for (std::uint64_t k = 1; k <= n; ++k) {
    cur = cur * zeta;
    if (std::gcd(k, n) != 1) continue;
    auto key = [](const GF2Elt& e) { return std::make_pair(e.b(), e.a()); };
    if (key(cur) < key(best)) best = cur;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache[{f.p, n}] = best;
  return best;
}

GF2Elt reduce_cyclo(const GF2Field& f, const CycloElt& c) {
  if (c.is_rational()) return GF2Elt::from_rational(f, c.rational());
  GF2Elt z = nth_root_of_unity(f, 48);
  GF2Elt acc = zero(f), zp = one(f);
  for (int i = 0; i < CycloElt::kDegree; ++i) {
    if (c.coeff(i) != 0) acc += GF2Elt::from_rational(f, c.coeff(i)) * zp;
    zp = zp * z;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// GFPoly

GFPoly::GFPoly(const GF2Field& f, std::vector<GF2Elt> coeffs) : field_(f), c_(std::move(coeffs)) { trim(); }

void GFPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GFPoly GFPoly::monomial(const GF2Field& f, std::size_t deg, const GF2Elt& c) {
  std::vector<GF2Elt> v(deg + 1, zero(f));
  v[deg] = c;
  return GFPoly(f, std::move(v));
}

GFPoly GFPoly::linear(const GF2Elt& r) {
  GF2Field f = r.field();
  return GFPoly(f, {-r, one(f)});
}

GF2Elt GFPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero(field_); }

GFPoly GFPoly::operator+(const GFPoly& o) const {
  std::vector<GF2Elt> v(std::max(c_.size(), o.c_.size()), zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return GFPoly(field_, std::move(v));
}

GFPoly GFPoly::operator-(const GFPoly& o) const {
  std::vector<GF2Elt> v(std::max(c_.size(), o.c_.size()), zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return GFPoly(field_, std::move(v));
}

GFPoly GFPoly::operator*(const GFPoly& o) const {
  if (is_zero() || o.is_zero()) return GFPoly(field_);
  std::vector<GF2Elt> v(c_.size() + o.c_.size() - 1, zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return GFPoly(field_, std::move(v));
}

GFPoly GFPoly::operator*(const GF2Elt& c) const {
  std::vector<GF2Elt> v = c_;
  for (auto& x : v) x = x * c;
  return GFPoly(field_, std::move(v));
}

std::pair<GFPoly, GFPoly> GFPoly::divmod(const GFPoly& o) const {
  if (o.is_zero()) throw DomainError("polynomial division by zero");
  if (degree() < o.degree()) return {GFPoly(field_), *this};
  std::vector<GF2Elt> r = c_;
  std::vector<GF2Elt> q(c_.size() - o.c_.size() + 1, zero(field_));
  const GF2Elt linv = o.leading().inverse();
  const std::size_t dn = o.c_.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    const GF2Elt coef = r[k + dn] * linv;
    q[k] = coef;
    if (coef.is_zero()) continue;
    for (std::size_t j = 0; j <= dn; ++j) r[k + j] -= coef * o.c_[j];
  }
  r.resize(dn);
  return {GFPoly(field_, std::move(q)), GFPoly(field_, std::move(r))};
}

GFPoly GFPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

GFPoly GFPoly::derivative() const {
  if (c_.size() <= 1) return GFPoly(field_);
  std::vector<GF2Elt> v(c_.size() - 1, zero(field_));
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * GF2Elt::from_int(field_, static_cast<long>(i));
  return GFPoly(field_, std::move(v));
}

GF2Elt GFPoly::eval(const GF2Elt& x) const {
  GF2Elt acc = zero(field_);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

GFPoly GFPoly::compose(const GFPoly& g) const {
  GFPoly acc(field_);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * g + GFPoly(field_, {c_[k]});
  return acc;
}

std::string GFPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[k].encode() + ")";
    if (k > 0) s += "*x^" + std::to_string(k);
  }
  return s;
}

GFPoly gcd(GFPoly a, GFPoly b) {
  while (!b.is_zero()) {
    GFPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

GFPoly powmod(const GFPoly& base, std::uint64_t e, const GFPoly& m) {
  GFPoly r(m.field(), {one(m.field())});
  r = r % m;
  GFPoly x = base % m;
  while (e) {
    if (e & 1) r = (r * x) % m;
    e >>= 1;
    if (e) x = (x * x) % m;
  }
  return r;
}

namespace {

// Product of the distinct linear factors of f over F_p^2.
GFPoly split_part(const GFPoly& f) {
  const GF2Field& F = f.field();
  GFPoly x(F, {zero(F), one(F)});
  GFPoly xq = powmod(x, F.p * F.p, f);
  return gcd(f, xq - x);
}

std::uint64_t poly_seed(const GFPoly& f) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(f.field().p);
  for (const auto& c : f.coeffs()) {
    mix(c.a());
    mix(c.b());
  }
  return h;
}

void equal_degree_linear(const GFPoly& g, std::mt19937_64& rng, std::vector<GF2Elt>& out) {
  const GF2Field& F = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    GFPoly m = g.monic();
    out.push_back(-m.coeff(0));
    return;
  }
  const std::uint64_t half = (F.p * F.p - 1) / 2;
  for (;;) {
    GF2Elt delta(F, rng() % F.p, rng() % F.p);
    GFPoly h(F, {delta, one(F)});
    GFPoly w = powmod(h, half, g) - GFPoly(F, {one(F)});
    GFPoly d = gcd(g, w);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      equal_degree_linear(d, rng, out);
      equal_degree_linear(g / d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Root> roots(const GFPoly& f) {
  if (f.degree() < 1) throw DomainError("roots() needs a polynomial of degree >= 1");
  GFPoly g = split_part(f);
  std::mt19937_64 rng(poly_seed(f));
  std::vector<GF2Elt> distinct;
  equal_degree_linear(g, rng, distinct);
  std::sort(distinct.begin(), distinct.end());
  std::vector<Root> out;
  for (const auto& r : distinct) {
    int mult = 0;
    GFPoly cur = f;
    GFPoly lin = GFPoly::linear(r);
    for (;;) {
      auto [q, rem] = cur.divmod(lin);
      if (!rem.is_zero()) break;
      ++mult;
      cur = std::move(q);
    }
    out.push_back({r, mult});
  }
  return out;
}

int split_count(const GFPoly& f) {
  if (f.degree() < 1) throw DomainError("split_count() needs a polynomial of degree >= 1");
  return split_part(f).degree();
}

}  // namespace weber
