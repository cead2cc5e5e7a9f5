#include <random>

#include "doctest.h"
#include "weber/error.hpp"
#include "weber/gf.hpp"
#include "weber/linalg.hpp"

using namespace weber;

namespace {

std::vector<GF2Elt> all_elements(const GF2Field& f) {
  std::vector<GF2Elt> v;
  for (std::uint64_t a = 0; a < f.p; ++a)
    for (std::uint64_t b = 0; b < f.p; ++b) v.emplace_back(f, a, b);
  return v;
}

GFPoly random_poly(const GF2Field& f, int deg, std::mt19937_64& rng) {
  std::vector<GF2Elt> c;
  for (int i = 0; i < deg; ++i) c.emplace_back(f, rng() % f.p, rng() % f.p);
  c.push_back(one(f));
  return GFPoly(f, c);
}

}  // namespace

TEST_CASE("field construction") {
  CHECK(make_field(13).d == 2);
  CHECK(make_field(17).d == 3);
  CHECK(make_field(7).d == 3);
  CHECK_THROWS_AS(make_field(9), DomainError);
  CHECK_THROWS_AS(make_field(2), DomainError);
  CHECK(make_field(101).header() == "p=101 d=2");
}

TEST_CASE("element arithmetic and encoding") {
  GF2Field f = make_field(13);
  GF2Elt u(f, 0, 1);
  CHECK(u * u == GF2Elt(f, 2));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    GF2Elt x(f, rng() % 13, rng() % 13), y(f, rng() % 13, rng() % 13);
    if (!y.is_zero()) CHECK((x / y) * y == x);
    CHECK(x.pow(13) == x.frobenius());
    CHECK(GF2Elt::decode(f, x.encode()) == x);
  }
  CHECK(GF2Elt(f, 3, 5).encode() == "3+5*u");
  CHECK_THROWS_AS(GF2Elt::decode(f, "3+5"), DomainError);
  CHECK_THROWS_AS(zero(f).inverse(), DomainError);
  CHECK(GF2Elt::from_rational(f, Rational(1, 2)) * GF2Elt(f, 2) == one(f));
  CHECK_THROWS_AS(GF2Elt::from_rational(f, Rational(1, 13)), DomainError);
}

TEST_CASE("square roots") {
  GF2Field f = make_field(13);
  CHECK(*sqrt(GF2Elt(f, 4)) == GF2Elt(f, 2));
  CHECK(*sqrt(GF2Elt(f, 2)) == GF2Elt(f, 0, 1));
  CHECK(sqrt(zero(f))->is_zero());
  for (std::uint64_t p : {7ULL, 13ULL, 17ULL, 41ULL}) {
    GF2Field g = make_field(p);
    int squares = 0;
    for (const auto& x : all_elements(g)) {
      auto r = sqrt(x);
      // Oracle: brute-force search for a square root.
      bool exists = false;
      for (const auto& y : all_elements(g))
        if (y * y == x) {
          exists = true;
          break;
        }
      CHECK(r.has_value() == exists);
      if (r) {
        CHECK(*r * *r == x);
        CHECK_FALSE(-*r < *r);
        ++squares;
      }
    }
    CHECK(squares == static_cast<int>((p * p - 1) / 2 + 1));
  }
}

TEST_CASE("roots of unity") {
  GF2Field f17 = make_field(17);
  CHECK(nth_root_of_unity(f17, 8) == GF2Elt(f17, 2));
  CHECK(nth_root_of_unity(f17, 4) == GF2Elt(f17, 4));
  CHECK_THROWS_AS(nth_root_of_unity(f17, 7), DomainError);
  for (std::uint64_t p = 5; p < 200; p += 2) {
    if (!weber::linalg::is_prime(p)) continue;
    GF2Field f = make_field(p);
    for (std::uint64_t n : {3ULL, 8ULL, 16ULL, 24ULL, 48ULL}) {
      if ((p * p - 1) % n != 0) {
        CHECK(n % 16 == 0);
        CHECK_THROWS_AS(nth_root_of_unity(f, n), DomainError);
        continue;
      }
      GF2Elt z = nth_root_of_unity(f, n);
      CHECK(z.pow(n).is_one());
      for (std::uint64_t q : {2ULL, 3ULL})
        if (n % q == 0) CHECK_FALSE(z.pow(n / q).is_one());
    }
  }
}

TEST_CASE("root finding against exhaustive search") {
  std::mt19937_64 rng(5);
  for (std::uint64_t p : {5ULL, 13ULL, 17ULL}) {
    GF2Field f = make_field(p);
    for (int t = 0; t < 20; ++t) {
      GFPoly g = random_poly(f, 1 + static_cast<int>(rng() % 6), rng);
      // Plant a repeated root.
      GF2Elt r(f, rng() % p, rng() % p);
      g = g * GFPoly::linear(r) * GFPoly::linear(r);
      auto rs = roots(g);
      std::vector<GF2Elt> brute;
      for (const auto& x : all_elements(f))
        if (g.eval(x).is_zero()) brute.push_back(x);
      REQUIRE(rs.size() == brute.size());
      GFPoly prod(f, {one(f)});
      for (std::size_t i = 0; i < rs.size(); ++i) {
        CHECK(rs[i].value == brute[i]);
        for (int m = 0; m < rs[i].multiplicity; ++m) prod = prod * GFPoly::linear(rs[i].value);
      }
      CHECK((g % prod).is_zero());
      CHECK(split_count(g) == static_cast<int>(brute.size()));
      auto again = roots(g);
      for (std::size_t i = 0; i < rs.size(); ++i) CHECK(again[i].value == rs[i].value);
    }
  }
}

TEST_CASE("documented examples") {
  GF2Field f = make_field(13);
  GFPoly x2m2(f, {GF2Elt::from_int(f, -2), zero(f), one(f)});
  auto rs = roots(x2m2);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].value == GF2Elt(f, 0, 1));
  CHECK(rs[1].value == GF2Elt(f, 0, 12));
  GFPoly fact = GFPoly::linear(GF2Elt(f, 3)) * GFPoly::linear(GF2Elt(f, 3)) * GFPoly::linear(GF2Elt(f, 5));
  auto fr = roots(fact);
  REQUIRE(fr.size() == 2);
  CHECK(fr[0].multiplicity == 2);
  CHECK(fr[1].multiplicity == 1);
  // (x - 16)^3 - 5x over F_13^2
  GFPoly c = GFPoly::linear(GF2Elt::from_int(f, 16));
  GFPoly cub = c * c * c - GFPoly(f, {zero(f), GF2Elt(f, 5)});
  CHECK(split_count(cub) == 3);
  CHECK(split_count(GFPoly(f, {GF2Elt::from_int(f, -2), zero(f), one(f)})) == 2);
}
