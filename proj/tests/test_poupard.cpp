#include <doctest.h>

#include "oracles.hpp"
#include "treecalc/poupard.hpp"

using namespace treecalc;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("poupard") {
  TEST_CASE("first rows") {
    const Triangle t = poupard_triangle(4);
    CHECK(t.row(0) == ints({1}));
    CHECK(t.row(1) == ints({0, 1, 0}));
    CHECK(t.row(2) == ints({0, 1, 2, 1, 0}));
    CHECK(t.row(3) == ints({0, 4, 8, 10, 8, 4, 0}));
    CHECK(t.at(3, 4) == 10);
    CHECK(t.at(3, 0) == 0);
    CHECK(t.at(3, 8) == 0);
  }

  TEST_CASE("difference equation and row sums") {
    const Triangle t = poupard_triangle(12);
    const auto tan = oracle::tangent_numbers(13);
    for (int n = 1; n <= 12; ++n) {
      CHECK(t.at(n, 1) == 0);
      CHECK(t.at(n, 2 * n + 1) == 0);
      for (int m = 1; m + 2 <= 2 * n + 1; ++m)
        CHECK(t.at(n, m + 2) - 2 * t.at(n, m + 1) + t.at(n, m) + 2 * t.at(n - 1, m) == 0);
      for (int m = 1; m <= 2 * n + 1; ++m) CHECK(t.at(n, m) == t.at(n, 2 * n + 2 - m));
      CHECK(t.row_sum(n) * (BigInt(1) << n) == tan[n]);
    }
  }

  TEST_CASE("tangent numbers against the zigzag triangle") {
    const auto mine = tangent_numbers(20);
    const auto ref = oracle::tangent_numbers(20);
    REQUIRE(mine.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(mine[i] == ref[i]);
    CHECK(ref[4] == 7936);
  }

  TEST_CASE("json and bfile") {
    const Triangle t = poupard_triangle(2);
    CHECK(t.to_json() == R"({"rows":[[1],[0,1,0],[0,1,2,1,0]]})");
    CHECK(Triangle::from_json(t.to_json()) == t);
    CHECK(t.to_bfile().substr(0, 12) == "0 1\n1 0\n2 1\n");
    const Triangle big = poupard_triangle(30);
    CHECK(Triangle::from_json(big.to_json()) == big);
    CHECK_THROWS(Triangle::from_json(R"({"rows":[[1],[0,1.5,0]]})"));
    CHECK_THROWS(Triangle::from_json(R"({"rows":[[1],[0,"1",0]]})"));
  }

  TEST_CASE("poupard matrix predicate") {
    Grid g(4, 4);
    CHECK(is_poupard_matrix(g));
    g.at(2, 0) = 1;
    const auto v = poupard_violation(g);
    REQUIRE(v);
    CHECK(v->i == 0);
    CHECK(v->j == 0);
    CHECK(v->residual == 1);
  }
}
