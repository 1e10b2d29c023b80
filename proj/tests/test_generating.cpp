#include <doctest.h>

#include "treecalc/generating.hpp"
#include "treecalc/poupard.hpp"

using namespace treecalc;
using series::RootTwoScalar;

namespace {

const MatrixList& matrices() {
  static const MatrixList list = build_sequence(10, BuildStrategy::parse("d1"));
  return list;
}

}  // namespace

TEST_SUITE("generating") {
  TEST_CASE("lower and upper triangles at cap 6") {
    const int cap = 6;
    CHECK(matrices_needed_for_cap(cap) == 4);
    CHECK(lambda_lhs(cap, matrices()) == lambda_rhs(cap));
    CHECK(omega_lhs(cap, matrices()) == omega_rhs(cap));
    CHECK(lambda_rhs(cap).is_rational());
    CHECK(omega_rhs(cap).is_rational());
  }

  TEST_CASE("low-order coefficients") {
    const auto l = lambda_rhs(2);
    CHECK(l.coeff(0, 0, 0) == RootTwoScalar(1));
    CHECK(l.dump().substr(0, 12) == "0 0 0 1/1 0/");
    CHECK(omega_rhs(0).dump().empty());
    CHECK(omega_rhs(2).coeff(1, 0, 1) == RootTwoScalar(1));
  }

  TEST_CASE("missing matrices are reported") {
    const MatrixList few(matrices().begin(), matrices().begin() + 2);
    CHECK_THROWS_AS(lambda_lhs(6, few), InsufficientMatrices);
    CHECK_THROWS_AS(reindex_omega(3, 6, few), InsufficientMatrices);
  }

  TEST_CASE("reindexed grids are Poupard matrices") {
    for (int p = 1; p <= 4; ++p) {
      const int size = 7;
      REQUIRE(matrices_needed_for_reindex(p, size) <= static_cast<int>(matrices().size()));
      CHECK(is_poupard_matrix(reindex_lambda(p, size, matrices())));
      CHECK(is_poupard_matrix(reindex_omega(p, size, matrices())));
    }
    const Grid zero = reindex_lambda(0, 6, matrices());
    CHECK(zero.total() == 0);
    const Grid l1 = reindex_lambda(1, 4, matrices());
    CHECK(l1.at(0, 0) == 1);
    CHECK(l1.at(1, 0) == 0);
    CHECK(l1.at(1, 1) == 1);
  }

  TEST_CASE("boundary relations and closed forms") {
    const VerifyReport boundary = boundary_relations_check(3, 6, matrices());
    for (const auto& rec : boundary.records())
      CHECK_MESSAGE(rec.status == CheckStatus::pass, rec.name << ": " << rec.counterexample);
    const int cap = 6, p_max = 3;
    REQUIRE(matrices_needed_for_closed_forms(cap, p_max) <= static_cast<int>(matrices().size()));
    const VerifyReport closed = lambda1_closed_forms(cap, p_max, matrices());
    for (const auto& rec : closed.records())
      CHECK_MESSAGE(rec.status == CheckStatus::pass, rec.name << ": " << rec.counterexample);
  }

  TEST_CASE("a damaged matrix is caught") {
    MatrixList list(matrices().begin(), matrices().begin() + 4);
    Grid g = list[3].grid();
    g.at(4, 1) += 1;
    list[3] = DeltaMatrix(4, g);
    CHECK_FALSE(lambda_lhs(6, list) == lambda_rhs(6));
  }
}
