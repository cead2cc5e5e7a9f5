#include "doctest.h"
#include "weber/error.hpp"
#include "weber/weberaction.hpp"

using namespace weber;

TEST_CASE("generator relations") {
  CHECK(iota_word("SS") == CycMat3::identity());
  CHECK(iota_word("") == CycMat3::identity());
  CHECK(iota_word("Tt") == CycMat3::identity());
  CHECK(iota_word("sS") == CycMat3::identity());
  CHECK(iota_word("TT") == CycMat3::diag(root_of_unity(24, -1), root_of_unity(24, -1), root_of_unity(24, 2)));
  CHECK(iota_word("STSSTS") == CycMat3::diag(root_of_unity(24, -1), root_of_unity(24, 2), root_of_unity(24, -1)));
  CHECK(iota_T().pow(16) == CycMat3::scalar(root_of_unity(3, -1)));
  CHECK_THROWS_AS(iota_word("SX"), DomainError);
  // The action on a formal triple: (u0,u1,u2) o S = (u0, z8 u2, z8^-1 u1).
  CycMat3 S = iota_S();
  CHECK(S.at(2, 1) == root_of_unity(8, 1));
  CHECK(S.at(1, 2) == root_of_unity(8, -1));
}

TEST_CASE("closure of the Weber action") {
  GroupReport r = group_report();
  CHECK(r.order_G == 1152);
  CHECK(r.order_D == 192);
  CHECK(r.D_abelian);
  CHECK(r.D_generated_by_T2_STS2);
  CHECK(r.all_monomial);
  CHECK(r.permutation_is_homomorphism);
  CHECK(r.permutation_image == 6);
  CHECK(r.kernel_is_D);
  CHECK(r.U_V_W_permutations);
  CHECK(r.S_squared_identity);
  CHECK(r.ST_cubed_scalar);
  CHECK(r.T16_relation);
  CHECK_THROWS_AS(group_closure_elements(100), DivergenceError);
}

TEST_CASE("level 16 identity") {
  SL2Report r = sl2_identity_check();
  CHECK(r.matches);
  CHECK(r.square_matches);
  CHECK(r.mod8_scalar);
  CHECK(r.acts_trivially_on_cubes);
  // Independent 2x2 product: (13 8; 8 5)^2 = (233 144; 144 89) = (9 0; 0 9) mod 16.
  CHECK((13 * 13 + 8 * 8) % 16 == 9);
  CHECK((13 * 8 + 8 * 5) % 16 == 0);
}
