#include <doctest.h>

#include <random>

#include "treecalc/series.hpp"

using namespace treecalc;
using namespace treecalc::series;

namespace {

RootTwoScalar q(long a, long b = 1) { return RootTwoScalar(Rational(a, b)); }

TriSeries random_series(std::mt19937& rng, int cap) {
  std::uniform_int_distribution<int> d(-4, 4);
  TriSeries s(cap);
  for (std::size_t p = 0; p < s.size(); ++p) {
    const Exponent e = s.exponent_at(p);
    s.set(e.i, e.j, e.k, RootTwoScalar(Rational(d(rng), 1 + (d(rng) & 3)), Rational(d(rng), 2)));
  }
  return s;
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("root-two scalar arithmetic") {
    const RootTwoScalar r = RootTwoScalar::sqrt2();
    CHECK(r * r == RootTwoScalar(2));
    const RootTwoScalar a{Rational(1, 2), Rational(3)};
    const RootTwoScalar b{Rational(-2), Rational(1, 3)};
    // (1/2 + 3r)(-2 + r/3) = -1 + 2 + (1/6 - 6) r
    CHECK(a * b == RootTwoScalar(Rational(1), Rational(-35, 6)));
    CHECK(a * a.inverse() == RootTwoScalar(1));
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(RootTwoScalar().inverse(), std::domain_error);
    CHECK(RootTwoScalar(Rational(2, 4), Rational(-3, 6)).to_string() == "1/2 -1/2");
  }

  TEST_CASE("dense index round trip") {
    TriSeries s(7);
    for (std::size_t p = 0; p < s.size(); ++p) {
      const Exponent e = s.exponent_at(p);
      s.set(e.i, e.j, e.k, RootTwoScalar(static_cast<long>(p) + 1));
    }
    std::size_t expected = 1;
    bool ordered = true;
    Exponent last{-1, 0, 0};
    s.for_each_nonzero([&](const Exponent& e, const RootTwoScalar& c) {
      ordered = ordered && c == RootTwoScalar(static_cast<long>(expected++));
      if (last.i >= 0)
        ordered = ordered && std::make_tuple(last.degree(), last.i, last.j) <
                                 std::make_tuple(e.degree(), e.i, e.j);
      last = e;
    });
    CHECK(ordered);
    CHECK(expected - 1 == s.size());
    CHECK(s.size() == 8u * 9u * 10u / 6u);
  }

  TEST_CASE("products") {
    const int cap = 6;
    const TriSeries x = TriSeries::variable(cap, Variable::x);
    const TriSeries one = TriSeries::one(cap);
    TriSeries want = one;
    want.set(2, 0, 0, -1);
    CHECK((one + x) * (one - x) == want);
    CHECK_THROWS_AS(TriSeries(3) * TriSeries(4), CapMismatch);
  }

  TEST_CASE("pythagorean identity at cap 10") {
    const auto r2 = RootTwoScalar::sqrt2();
    const LinearForm f{r2, 0, 0};
    const TriSeries s = sin_series(f, 10), c = cos_series(f, 10);
    CHECK(s * s + c * c == TriSeries::one(10));
  }

  TEST_CASE("half-angle identity at cap 8") {
    const RootTwoScalar h{0, Rational(1, 2)};
    const auto r2 = RootTwoScalar::sqrt2();
    const TriSeries c = cos_series({h, h, h}, 8);
    const TriSeries rhs = RootTwoScalar(Rational(1, 2)) * (TriSeries::one(8) + cos_series({r2, r2, r2}, 8));
    CHECK(c * c == rhs);
  }

  TEST_CASE("trig coefficients") {
    const auto r2 = RootTwoScalar::sqrt2();
    CHECK(cos_series({r2, 0, 0}, 4).coeff(2, 0, 0) == RootTwoScalar(-1));
    CHECK(sin_series({r2, 0, 0}, 4).coeff(1, 0, 0) == r2);
    const RootTwoScalar h{0, Rational(1, 2)};
    const TriSeries tan = r2 * (sin_series({h, 0, 0}, 5) * reciprocal(cos_series({h, 0, 0}, 5)));
    CHECK(tan.coeff(1, 0, 0) == RootTwoScalar(1));
    CHECK(tan.coeff(3, 0, 0) == q(1, 6));
    // T_5 / 2^2 / 5! = 4 / 120
    CHECK(tan.coeff(5, 0, 0) == q(1, 30));
  }

  TEST_CASE("reciprocal") {
    const int cap = 9;
    TriSeries a = TriSeries::one(cap) - TriSeries::variable(cap, Variable::x);
    const TriSeries inv = reciprocal(a);
    for (int d = 0; d <= cap; ++d) CHECK(inv.coeff(d, 0, 0) == RootTwoScalar(1));
    CHECK(inv.coeff(1, 1, 0).is_zero());
    const RootTwoScalar h{0, Rational(1, 2)};
    const TriSeries c = cos_series({h, h, h}, 6);
    CHECK(reciprocal(c * c).coeff(0, 0, 0) == RootTwoScalar(1));
    TriSeries bad = TriSeries::variable(cap, Variable::x);
    bad.set(2, 0, 0, 1);
    CHECK_THROWS_AS(reciprocal(bad), ZeroConstantTerm);
  }

  TEST_CASE("ring laws on random operands") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 5; ++trial) {
      const TriSeries a = random_series(rng, 4), b = random_series(rng, 4), c = random_series(rng, 4);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * TriSeries::one(4) == a);
      if (!a.coeff(0, 0, 0).is_zero()) CHECK(a * reciprocal(a) == TriSeries::one(4));
    }
  }

  TEST_CASE("swapping variables") {
    TriSeries s(3);
    s.set(1, 2, 0, 5);
    const TriSeries t = s.swapped(Variable::y, Variable::z);
    CHECK(t.coeff(1, 0, 2) == RootTwoScalar(5));
    CHECK(t.coeff(1, 2, 0).is_zero());
  }

  TEST_CASE("dump format") {
    TriSeries s(2);
    s.set(0, 0, 0, 1);
    s.set(0, 1, 1, RootTwoScalar(Rational(-1, 3), Rational(2)));
    CHECK(s.dump() == "0 0 0 1/1 0/1\n0 1 1 -1/3 2/1\n");
  }
}
