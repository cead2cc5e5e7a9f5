#include "weber/lines.hpp"

#include <algorithm>

#include "weber/error.hpp"

namespace weber {

namespace {

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

IntPoly monomial(int deg, long c) {
  IntPoly r(static_cast<std::size_t>(deg) + 1, Integer(0));
  r[static_cast<std::size_t>(deg)] = c;
  return r;
}

IntPoly add(IntPoly a, const IntPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

IntPoly cube(const IntPoly& a) { return mul(mul(a, a), a); }

InvariantLine x_line(int n) {
  InvariantLine l;
  l.name = "x" + std::to_string(n);
  l.family = InvariantLine::Family::X;
  l.n = n;
  l.cover_degree = 3 * n;
  l.j_numerator = cube(add(monomial(n, 1), monomial(0, -16)));
  l.j_denominator = monomial(n, 1);
  if (n == 24) l.sparsity_modulus = 24;
  l.fiber_action_order = n;
  l.obstructed_primes = {2};
  if (n % 3 == 0) l.obstructed_primes.push_back(3);
  return l;
}

InvariantLine y_line(int n) {
  InvariantLine l;
  l.name = "y" + std::to_string(n);
  l.family = InvariantLine::Family::Y;
  l.n = n;
  l.cover_degree = 6 * n;
  IntPoly inner = add(add(monomial(2 * n, 1), monomial(n, 1)), monomial(0, 1));
  IntPoly num = cube(inner);
  for (auto& c : num) c *= 256;
  l.j_numerator = num;
  IntPoly sn1 = add(monomial(n, 1), monomial(0, 1));
  l.j_denominator = mul(monomial(2 * n, 1), mul(sn1, sn1));
  l.fiber_action_order = n;
  l.obstructed_primes = {2};
  return l;
}

std::vector<InvariantLine> build_registry() {
  std::vector<InvariantLine> out;
  for (int n : {1, 2, 3, 4, 6, 8, 12, 24}) out.push_back(x_line(n));
  {
    InvariantLine t;
    t.name = "t";
    t.family = InvariantLine::Family::T;
    t.n = 3;
    t.cover_degree = 9;
    t.j_numerator = cube(add(monomial(3, 1), monomial(0, 16)));
    t.j_denominator = monomial(3, 1);
    t.fiber_action_order = 3;
    t.obstructed_primes = {2, 3};
    out.push_back(t);
  }
  {
    InvariantLine r;
    r.name = "r";
    r.family = InvariantLine::Family::R;
    r.n = 8;
    r.cover_degree = 24;
    r.j_numerator = cube(add(monomial(8, 1), monomial(0, -16)));
    r.j_denominator = monomial(8, 1);
    r.fiber_action_order = 8;
    r.obstructed_primes = {2};
    out.push_back(r);
  }
  for (int n : {1, 2, 4, 8}) out.push_back(y_line(n));
  {
    InvariantLine j;
    j.name = "j";
    j.family = InvariantLine::Family::J;
    j.cover_degree = 1;
    j.j_numerator = monomial(1, 1);
    j.j_denominator = monomial(0, 1);
    out.push_back(j);
  }
  return out;
}

}  // namespace

bool InvariantLine::obstructs(int ell) const {
  return std::find(obstructed_primes.begin(), obstructed_primes.end(), ell) != obstructed_primes.end();
}

const std::vector<InvariantLine>& registered_lines() {
  static const std::vector<InvariantLine> lines = build_registry();
  return lines;
}

const InvariantLine& line_by_name(std::string_view name) {
  for (const auto& l : registered_lines())
    if (l.name == name) return l;
  throw DomainError("unregistered invariant line: " + std::string(name));
}

}  // namespace weber
