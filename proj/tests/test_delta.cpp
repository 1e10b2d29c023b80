#include <doctest.h>

#include "treecalc/delta.hpp"
#include "treecalc/poupard.hpp"
#include "treecalc/trees.hpp"

using namespace treecalc;

namespace {

DeltaMatrix from_rows(int n, std::vector<std::vector<long>> rows) {
  Grid g(2 * n, 2 * n);
  for (int r = 0; r < 2 * n; ++r)
    for (int c = 0; c < 2 * n; ++c) g.at(r, c) = rows[r][c];
  return DeltaMatrix(n, g);
}

const DeltaMatrix& m2() {
  static const DeltaMatrix M = from_rows(2, {{0, 0, 0, 0}, {0, 0, 1, 0}, {1, 1, 0, 0}, {0, 1, 0, 0}});
  return M;
}

}  // namespace

TEST_SUITE("delta") {
  TEST_CASE("first matrices") {
    CHECK(DeltaMatrix::first().at(2, 1) == 1);
    CHECK(build_matrix(1, BuildStrategy::parse("d1")) == DeltaMatrix::first());
    CHECK(build_matrix(2, BuildStrategy::parse("D1")) == m2());
    CHECK(m2().row_sum(3) == 2);
    CHECK(m2().col_sum(2) == 2);
    CHECK(m2().total() == 4);
    CHECK(m2().at(0, 1) == 0);
    CHECK(m2().at(5, 1) == 0);
  }

  TEST_CASE("strategies agree") {
    const auto ref = build_sequence(6, BuildStrategy::parse("d1"));
    for (const auto& s : BuildStrategy::catalog()) {
      const auto seq = build_sequence(6, s);
      REQUIRE(seq.size() == ref.size());
      for (std::size_t i = 0; i < seq.size(); ++i) CHECK_MESSAGE(seq[i] == ref[i], s.tag << " n=" << i + 1);
    }
    CHECK(BuildStrategy::catalog().size() == 9);
    CHECK_THROWS_AS(BuildStrategy::parse("d10"), std::invalid_argument);
  }

  TEST_CASE("matrices equal the tree statistics") {
    const auto seq = build_sequence(5, BuildStrategy::parse("d2"));
    for (int n = 1; n <= 5; ++n) CHECK(seq[n - 1].grid() == joint_distribution(n));
  }

  TEST_CASE("recurrences vanish on their regions") {
    const auto seq = build_sequence(6, BuildStrategy::parse("d9"));
    for (int n = 2; n <= 6; ++n) {
      const DeltaMatrix& M = seq[n - 1];
      const DeltaMatrix& prev = seq[n - 2];
      for (auto r : {Recurrence::R1, Recurrence::R2, Recurrence::R3, Recurrence::R4})
        for (int m = 1; m <= 2 * n; ++m)
          for (int k = 1; k <= 2 * n; ++k)
            if (in_region(recurrence_region(r), n, m, k)) CHECK(recurrence_residual(r, M, prev, m, k) == 0);
    }
  }

  TEST_CASE("regions sit on their side of the diagonal") {
    for (int n = 1; n <= 5; ++n)
      for (int m = 1; m <= 2 * n; ++m)
        for (int k = 1; k <= 2 * n; ++k) {
          if (in_region(Region::L1, n, m, k) || in_region(Region::L2, n, m, k)) CHECK(m > k);
          if (in_region(Region::U1, n, m, k) || in_region(Region::U2, n, m, k)) CHECK(m < k);
        }
    CHECK(in_region(Region::L1, 3, 4, 1));
    CHECK_FALSE(in_region(Region::L1, 3, 5, 1));
    CHECK(in_region(Region::L2, 3, 6, 1));
    CHECK_FALSE(in_region(Region::L2, 3, 3, 1));
    CHECK(in_region(Region::U2, 3, 1, 6));
    CHECK_FALSE(in_region(Region::U1, 3, 1, 6));
  }

  TEST_CASE("solver failures") {
    const DeltaMatrix prev = m2();
    try {
      solve_constraints(3, {}, {Recurrence::R1, Recurrence::R2}, prev);
      FAIL("expected an unresolved system");
    } catch (const SolveError& e) {
      CHECK(e.kind() == SolveError::Kind::unresolved);
    }
    auto known = boundary_cells(3, Boundary::I1, prev);
    const auto i2 = boundary_cells(3, Boundary::I2, prev);
    known.insert(known.end(), i2.begin(), i2.end());
    known.push_back({6, 1, 999});
    try {
      solve_constraints(3, known, {Recurrence::R1, Recurrence::R2}, prev);
      FAIL("expected an inconsistent system");
    } catch (const SolveError& e) {
      CHECK(e.kind() == SolveError::Kind::inconsistent);
    }
  }

  TEST_CASE("properties hold") {
    const auto seq = build_sequence(7, BuildStrategy::parse("d1"));
    for (int n = 1; n <= 7; ++n) {
      std::optional<DeltaMatrix> prev;
      if (n > 1) prev = seq[n - 2];
      const VerifyReport r = matrix_properties_check(seq[n - 1], prev);
      for (const auto& rec : r.records()) CHECK_MESSAGE(rec.status != CheckStatus::fail, rec.name << ": " << rec.counterexample);
    }
    const DeltaMatrix& M4 = seq[3];
    CHECK(M4.at(4, 2) + M4.at(2, 4) == 20);
    CHECK(M4.at(4, 3) + M4.at(2, 3) == 20);
    CHECK(M4.at(3, 4) + M4.at(3, 2) == 20);
  }

  TEST_CASE("marginals follow the triangle") {
    const auto seq = build_sequence(7, BuildStrategy::parse("d1"));
    const Triangle t = poupard_triangle(7);
    for (int n = 1; n <= 7; ++n)
      for (int m = 1; m <= 2 * n; ++m) {
        CHECK(seq[n - 1].row_sum(m) == t.at(n, m));
        CHECK(seq[n - 1].col_sum(m) == t.at(n, m + 1));
      }
  }

  TEST_CASE("polynomial symmetry") {
    const Grid g = eoc_pom_polynomial(build_matrix(5, BuildStrategy::parse("d1")));
    for (int a = 0; a < g.rows(); ++a)
      for (int b = 0; b < g.cols(); ++b) CHECK(g.at(a, b) == g.at(b, a));
  }

  TEST_CASE("serialization") {
    CHECK(to_json(DeltaMatrix::first()) == R"({"n":1,"rows":[[0,0],[1,0]]})");
    CHECK(to_csv(DeltaMatrix::first()) == "0,0\n1,0\n");
    const DeltaMatrix M = build_matrix(9, BuildStrategy::parse("d1"));
    CHECK(matrix_from_json(to_json(M)) == M);
    CHECK(matrix_from_csv(to_csv(M)) == M);
    CHECK(to_pretty(m2()) == "0 0 0 0\n0 0 1 0\n1 1 0 0\n0 1 0 0\n");
    CHECK_THROWS(matrix_from_json(R"({"n":2,"rows":[[0,0],[1,0]]})"));
    CHECK_THROWS(matrix_from_json(R"({"n":1,"rows":[[0,0.5],[1,0]]})"));
    CHECK_THROWS(matrix_from_csv("0,0\n1\n"));
  }
}
