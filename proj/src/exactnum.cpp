#include "weber/exactnum.hpp"

#include <array>
#include <sstream>
#include <utility>
#include <vector>

#include "weber/error.hpp"

namespace weber {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational");
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw DomainError("bad rational: " + s);
  r.canonicalize();
  return r;
}

namespace {

// Reduce a length-31 product in place: z^16 = z^8 - 1.
void reduce(std::array<Rational, 31>& c) {
  for (int k = 30; k >= CycloElt::kDegree; --k) {
    if (sgn(c[k]) == 0) continue;
    c[k - 8] += c[k];
    c[k - 16] -= c[k];
    c[k] = 0;
  }
}

const std::array<CycloElt, 48>& zeta_table() {
  static const std::array<CycloElt, 48> table = [] {
    std::array<CycloElt, 48> t;
    std::array<Rational, 16> c{};
    c[0] = 1;
    t[0] = CycloElt::from_coeffs(c);
    for (int e = 1; e < 48; ++e) {
      // multiply previous by z
      const auto& prev = t[e - 1].coeffs();
      std::array<Rational, 31> w{};
      for (int i = 0; i < 16; ++i) w[i + 1] = prev[i];
      reduce(w);
      std::array<Rational, 16> nc{};
      for (int i = 0; i < 16; ++i) nc[i] = w[i];
      t[e] = CycloElt::from_coeffs(nc);
    }
    return t;
  }();
  return table;
}

}  // namespace

CycloElt CycloElt::from_coeffs(const std::array<Rational, kDegree>& c) {
  CycloElt e;
  e.coeffs_ = c;
  for (auto& x : e.coeffs_) x.canonicalize();
  return e;
}

CycloElt CycloElt::zeta_power(long e) {
  long r = e % kOrder;
  if (r < 0) r += kOrder;
  return zeta_table()[static_cast<std::size_t>(r)];
}

bool CycloElt::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycloElt::is_rational() const {
  for (int i = 1; i < kDegree; ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

CycloElt& CycloElt::operator+=(const CycloElt& o) {
  for (int i = 0; i < kDegree; ++i)
    if (sgn(o.coeffs_[i]) != 0) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloElt& CycloElt::operator-=(const CycloElt& o) {
  for (int i = 0; i < kDegree; ++i)
    if (sgn(o.coeffs_[i]) != 0) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycloElt CycloElt::operator-() const {
  CycloElt r;
  for (int i = 0; i < kDegree; ++i)
    if (sgn(coeffs_[i]) != 0) r.coeffs_[i] = -coeffs_[i];
  return r;
}

CycloElt CycloElt::scaled(const Rational& r) const {
  CycloElt out;
  if (sgn(r) == 0) return out;
  for (int i = 0; i < kDegree; ++i)
    if (sgn(coeffs_[i]) != 0) out.coeffs_[i] = coeffs_[i] * r;
  return out;
}

CycloElt operator*(const CycloElt& a, const CycloElt& b) {
  if (b.is_rational()) return a.scaled(b.coeffs_[0]);
  if (a.is_rational()) return b.scaled(a.coeffs_[0]);
  std::array<Rational, 31> w{};
  for (int i = 0; i < CycloElt::kDegree; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (int j = 0; j < CycloElt::kDegree; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      w[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  reduce(w);
  CycloElt r;
  for (int i = 0; i < CycloElt::kDegree; ++i) r.coeffs_[i] = std::move(w[i]);
  return r;
}

CycloElt& CycloElt::operator*=(const CycloElt& o) { return *this = *this * o; }

CycloElt& CycloElt::operator/=(const CycloElt& o) { return *this = *this * o.inverse(); }

CycloElt CycloElt::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(zeta_48)");
  if (is_rational()) return CycloElt(Rational(1 / coeffs_[0]));
  // Solve M x = e_0 where column j of M is this * z^j.
  constexpr int n = kDegree;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int j = 0; j < n; ++j) {
    CycloElt col = *this * zeta_power(j);
    for (int i = 0; i < n; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][n] = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) throw InternalError("singular multiplication matrix in Q(zeta_48)");
    std::swap(m[piv], m[c]);
    Rational inv = 1 / m[c][c];
    for (int k = c; k <= n; ++k) m[c][k] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c];
      for (int k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  CycloElt out;
  for (int i = 0; i < n; ++i) out.coeffs_[i] = m[i][n];
  return out;
}

CycloElt CycloElt::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloElt result(1L), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string CycloElt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kDegree; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i].get_str();
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
  }
  return first ? "0" : os.str();
}

CycloElt CycloElt::parse(std::string_view text) {
  CycloElt out;
  std::string s(text);
  std::size_t pos = 0;
  bool any = false;
  while (pos <= s.size()) {
    std::size_t next = s.find(" + ", pos);
    std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (term.empty()) throw DomainError("bad cyclotomic element: '" + s + "'");
    int index = 0;
    std::string rat = term;
    if (auto star = term.find('*'); star != std::string::npos) {
      rat = term.substr(0, star);
      std::string mono = term.substr(star + 1);
      if (mono == "z") {
        index = 1;
      } else if (mono.rfind("z^", 0) == 0) {
        try {
          index = std::stoi(mono.substr(2));
        } catch (const std::exception&) {
          throw DomainError("bad monomial: " + mono);
        }
      } else {
        throw DomainError("bad monomial: " + mono);
      }
    }
    if (index < 0 || index >= kDegree) throw DomainError("exponent out of range: " + term);
    out.coeffs_[index] += parse_rational(rat);
    any = true;
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  if (!any) throw DomainError("empty cyclotomic element");
  return out;
}

CycloElt root_of_unity(int m, long k) {
  if (m <= 0 || 48 % m != 0) throw DomainError("root_of_unity: " + std::to_string(m) + " does not divide 48");
  return CycloElt::zeta_power((48 / m) * k);
}

CycloElt sqrt2() { return root_of_unity(8, 1) + root_of_unity(8, -1); }

}  // namespace weber
