#include <random>

#include "doctest.h"
#include "weber/error.hpp"
#include "weber/lines.hpp"
#include "weber/models.hpp"
#include "weber/reduction.hpp"

using namespace weber;

namespace {

GF2Elt I(const GF2Field& f, long v) { return GF2Elt::from_int(f, v); }

ProjPoint pt(const GF2Field& f, std::initializer_list<long> xs) {
  ProjPoint P;
  for (long x : xs) P.push_back(I(f, x));
  return P;
}

GF2Elt line_j(const std::string& name, const GF2Elt& x) {
  const InvariantLine& L = line_by_name(name);
  return eval_int_poly(L.j_numerator, x) / eval_int_poly(L.j_denominator, x);
}

const ModelSpec W(int n) { return {n, ModelSpec::Kind::Weber}; }
const ModelSpec F(int n) { return {n, ModelSpec::Kind::Fermat}; }

}  // namespace

TEST_CASE("membership on the small models") {
  GF2Field f = make_field(97);
  CHECK(on_model(f, W(1), pt(f, {16, 16, -128, -2})));
  CHECK(on_model(f, F(1), pt(f, {1, 1, -2})));
  CHECK_FALSE(on_model(f, W(1), pt(f, {1, 1, 1, 1})));
  CHECK_THROWS_AS(on_model(f, W(1), pt(f, {1, 1, -2})), DomainError);
  CHECK_THROWS_AS(on_model(f, {3, ModelSpec::Kind::Weber}, pt(f, {1, 1, 1, 1})), DomainError);
  CHECK(sqrt8(f) * sqrt8(f) == I(f, 8));
}

TEST_CASE("n = 1 isomorphism on explicit points") {
  GF2Field f = make_field(97);
  ProjPoint w = fermat_to_weber(f, 1, pt(f, {1, 1, -2}));
  CHECK(w == pt(f, {16, 16, -128, -2}));
  CHECK(proj_equal(weber_to_fermat(f, 1, w), pt(f, {48, 48, -96})));
  CHECK(proj_equal(weber_to_fermat(f, 1, w), pt(f, {1, 1, -2})));
  ProjPoint cusp = fermat_to_weber(f, 1, pt(f, {1, -1, 0}));
  CHECK(cusp == pt(f, {16, -16, 0, 0}));
  CHECK(proj_equal(weber_to_fermat(f, 1, cusp), pt(f, {1, -1, 0})));
  CHECK_THROWS_AS(weber_to_fermat(f, 1, pt(f, {1, 1, 1, 1})), DomainError);
}

TEST_CASE("round trips between Weber and Fermat models") {
  for (std::uint64_t p : {97ULL, 113ULL, 257ULL}) {
    GF2Field f = make_field(p);
    std::mt19937_64 rng(p);
    for (int n : {1, 2, 4, 8}) {
      int singular = 0;
      for (int i = 0; i < 100; ++i) {
        ProjPoint s = random_fermat_point(f, n, rng);
        REQUIRE(on_model(f, F(n), s));
        ProjPoint w = fermat_to_weber(f, n, s);
        CHECK(on_model(f, W(n), w));
        ProjPoint back = weber_to_fermat(f, n, w);
        if (weber_singular(f, n, w)) {
          // Two Fermat points share this image; either is a valid inverse.
          CHECK(proj_equal(fermat_to_weber(f, n, back), w));
          ++singular;
        } else {
          CHECK(proj_equal(back, s));
        }

        ProjPoint w2 = random_weber_point(f, n, rng);
        REQUIRE(on_model(f, W(n), w2));
        ProjPoint s2 = weber_to_fermat(f, n, w2);
        CHECK(on_model(f, F(n), s2));
        CHECK(proj_equal(fermat_to_weber(f, n, s2), w2));
      }
      CHECK(singular <= 2);
    }
  }
}

TEST_CASE("the three charts of W_2 agree") {
  GF2Field f = make_field(97);
  std::mt19937_64 rng(4);
  int compared = 0;
  for (int i = 0; i < 100; ++i) {
    ProjPoint w = random_weber_point(f, 2, rng);
    std::vector<ProjPoint> images;
    for (int c = 0; c < 3; ++c)
      if (auto img = weber_to_fermat_chart(f, c, w)) images.push_back(*img);
    for (std::size_t a = 1; a < images.size(); ++a) {
      CHECK(proj_equal(images[0], images[a]));
      ++compared;
    }
  }
  CHECK(compared > 150);
}

TEST_CASE("Fermat projections and the j-relation") {
  GF2Field f = make_field(97);
  std::mt19937_64 rng(8);
  ProjPoint s = pt(f, {3, 5, 7});
  CHECK(fermat_projection(2, s) == I(f, 3) / I(f, 5));
  CHECK(fermat_projection(0, s) == I(f, 5) / I(f, 7));
  CHECK_THROWS_AS(fermat_projection(0, pt(f, {0, 1, 0})), ChartError);
  for (int n : {1, 2, 4, 8}) {
    int checked = 0;
    while (checked < 20) {
      ProjPoint P = random_fermat_point(f, n, rng);
      ProjPoint w = fermat_to_weber(f, n, P);
      if (P[1].is_zero() || w[3].is_zero()) continue;
      GF2Elt sv = fermat_projection(2, P);
      GF2Elt u = w[0] / w[3];
      if (u.is_zero() || sv.is_zero() || (sv.pow(static_cast<std::uint64_t>(n)) + one(f)).is_zero()) continue;
      CHECK(line_j("x" + std::to_string(n), u) == line_j("y" + std::to_string(n), sv));
      ++checked;
    }
  }
}
