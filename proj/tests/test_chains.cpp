#include <random>
#include <set>

#include "doctest.h"
#include "weber/chains.hpp"
#include "weber/error.hpp"

using namespace weber;

namespace {

GF2Elt I(const GF2Field& f, long v) { return GF2Elt::from_int(f, v); }

}  // namespace

TEST_CASE("twisted chain at p = 17, seed 3") {
  GF2Field f = make_field(17);
  ChainWitness w = build_chain(f, I(f, 3), ChainVariant::Twisted);
  CHECK(w.t0 == I(f, 16));
  CHECK(w.c0 == I(f, 13));
  CHECK(w.e0 == I(f, 14));
  CHECK(w.torsion[0] == Point::affine(I(f, 13), I(f, 12)));
  // y^2 = x(x+1)(x+16)
  CHECK(w.curves[0].a2 == I(f, 0));
  CHECK(w.curves[0].a4 == I(f, 16));
  // 8 e0 = 10 lies in F_17, hence is a square in F_{17^2}.
  CHECK(w.u3 * w.u3 == I(f, 10));
  auto lam = legendre_sequence(w);
  CHECK(lam[0] == I(f, 16));
  CHECK(lam[1] == I(f, 9));
  CHECK(lam[1] * (lam[1] - I(f, 1)) == I(f, 4));
  for (int k = 0; k < 3; ++k) CHECK(legendre_step_holds(lam[k], lam[k + 1]));
}

TEST_CASE("standard chain degeneracy at p = 17") {
  GF2Field f = make_field(17);
  CHECK(nth_root_of_unity(f, 8) * nth_root_of_unity(f, 8) == I(f, 4));
  CHECK_THROWS_AS(build_chain(f, I(f, 3), ChainVariant::Standard), DegenerateSeed);
  CHECK_THROWS_AS(build_chain(f, I(f, 0), ChainVariant::Twisted), DegenerateSeed);
  // t0 = -1 makes x(x-1)(x+t0) singular.
  CHECK_THROWS_AS(build_chain(f, nth_root_of_unity(f, 16), ChainVariant::Standard), DegenerateSeed);
}

TEST_CASE("random chains satisfy all identities") {
  for (std::uint64_t p : {41ULL, 73ULL, 1009ULL, 10007ULL}) {
    GF2Field f = make_field(p);
    std::mt19937_64 rng(p);
    int built[2] = {0, 0};
    for (int trial = 0; trial < 40; ++trial) {
      GF2Elt t3(f, rng() % p, rng() % p);
      for (auto variant : {ChainVariant::Standard, ChainVariant::Twisted}) {
        ChainWitness w;
        try {
          w = build_chain(f, t3, variant);
        } catch (const DegenerateSeed&) {
          continue;
        } catch (const NeedsExtension&) {
          continue;
        }
        ++built[variant == ChainVariant::Twisted];
        auto deg = composite_degree(w);
        CHECK(deg.degree == 8);
        CHECK(deg.kernel_x_count == 4);
        CHECK(composite_agrees(w, rng));
        if (variant == ChainVariant::Twisted) {
          auto lam = legendre_sequence(w);
          for (int k = 0; k < 3; ++k) CHECK(legendre_step_holds(lam[k], lam[k + 1]));
        }
      }
    }
    CHECK(built[0] > 20);
    CHECK(built[1] > 10);
  }
}

TEST_CASE("Legendre recursion over many seeds at p = 1 mod 8") {
  GF2Field f = make_field(97);
  std::mt19937_64 rng(99);
  int checked = 0;
  while (checked < 100) {
    GF2Elt t3(f, rng() % 97, rng() % 97);
    try {
      auto lam = legendre_sequence(build_chain(f, t3, ChainVariant::Twisted));
      for (int k = 0; k < 3; ++k) CHECK(legendre_step_holds(lam[k], lam[k + 1]));
      ++checked;
    } catch (const DegenerateSeed&) {
    } catch (const NeedsExtension&) {
    }
  }
  CHECK_THROWS_AS(legendre_step_holds(I(f, 0), I(f, 1)), DegenerateSeed);
  // lambda0 = 1 forces lambda1 in {0, 1}.
  CHECK(legendre_step_holds(I(f, 1), I(f, 0)));
  CHECK(legendre_step_holds(I(f, 1), I(f, 1)));
  CHECK_FALSE(legendre_step_holds(I(f, 1), I(f, 2)));
}

TEST_CASE("twisting seeds by eighth roots of unity") {
  GF2Field f = make_field(73);
  std::mt19937_64 rng(5);
  GF2Elt s3(f, 5, 7), t3(f, 11, 2);
  CHECK(twist_chain_seed(s3, t3, 0, 0) == std::make_pair(s3, t3));
  std::set<std::pair<std::uint64_t, std::uint64_t>> orbit;
  for (long i1 = 0; i1 < 8; ++i1)
    for (long i2 = 0; i2 < 8; ++i2) {
      auto [s, t] = twist_chain_seed(s3, t3, i1, i2);
      orbit.insert({s.a() * 1000 + s.b(), t.a() * 1000 + t.b()});
      if (i1 == 0) {
        auto w0 = build_chain(f, t3, ChainVariant::Standard);
        auto w1 = build_chain(f, t, ChainVariant::Standard);
        CHECK(w0.curves[0].j_invariant() == w1.curves[0].j_invariant());
      }
    }
  CHECK(64 % orbit.size() == 0);
}
