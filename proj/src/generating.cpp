#include "treecalc/generating.hpp"

#include <algorithm>
#include <string>

namespace treecalc {

using series::LinearForm;
using series::RootTwoScalar;
using series::TriSeries;

namespace {

const DeltaMatrix& matrix(const MatrixList& matrices, int n) {
  if (n < 1 || n > static_cast<int>(matrices.size()))
    throw InsufficientMatrices("M_" + std::to_string(n) + " is required but only M_1..M_" +
                               std::to_string(matrices.size()) + " were given");
  return matrices[n - 1];
}

const RootTwoScalar kInvRoot2{0, Rational(1, 2)};

LinearForm form(RootTwoScalar a, RootTwoScalar b, RootTwoScalar c) {
  return {std::move(a), std::move(b), std::move(c)};
}

RootTwoScalar rational(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return RootTwoScalar(q);
}

TriSeries two_cos_squared(const LinearForm& f, int cap) {
  const TriSeries c = series::cos_series(f, cap);
  return RootTwoScalar(2) * (c * c);
}

BigInt lambda_entry(int p, int i, int j, const MatrixList& matrices) {
  if ((i + j) % 2 == p % 2) return 0;
  const int k = j + 1, m = i + j + 2, n = (p + i + j + 1) / 2;
  return matrix(matrices, n).at(m, k);
}

BigInt omega_entry(int p, int i, int j, const MatrixList& matrices) {
  if ((i + j) % 2 != p % 2) return 0;
  const int m = p + 1, k = p + j + 2, n = (p + i + j + 2) / 2;
  return matrix(matrices, n).at(m, k);
}

// Univariate EGF of a sequence, substituted with a linear form.
TriSeries egf_of(const std::vector<BigInt>& seq, const LinearForm& f, int cap) {
  std::vector<RootTwoScalar> c;
  for (std::size_t i = 0; i < seq.size(); ++i) c.push_back(rational(seq[i], series::factorial(i)));
  return series::compose_linear(c, f, cap);
}

std::string first_difference(const TriSeries& a, const TriSeries& b) {
  for (std::size_t pos = 0; pos < a.size(); ++pos) {
    const auto e = a.exponent_at(pos);
    if (!(a.coeff(e) == b.coeff(e)))
      return "x^" + std::to_string(e.i) + " y^" + std::to_string(e.j) + " z^" + std::to_string(e.k) +
             ": " + a.coeff(e).to_string() + " vs " + b.coeff(e).to_string();
  }
  return "";
}

void expect_equal(Check& c, const TriSeries& a, const TriSeries& b) {
  c.expect(a == b, [&] { return first_difference(a, b); });
}

}  // namespace

TriSeries lambda_rhs(int cap) {
  const RootTwoScalar r2 = RootTwoScalar::sqrt2();
  const TriSeries num = series::cos_series(form(r2, 0, 0), cap) +
                        series::cos_series(form(0, r2, 0), cap) * series::cos_series(form(0, 0, r2), cap);
  return num * series::reciprocal(two_cos_squared(form(kInvRoot2, kInvRoot2, kInvRoot2), cap));
}

TriSeries omega_rhs(int cap) {
  const RootTwoScalar r2 = RootTwoScalar::sqrt2();
  const TriSeries num = series::sin_series(form(r2, 0, 0), cap) * series::sin_series(form(0, 0, r2), cap);
  return num * series::reciprocal(two_cos_squared(form(kInvRoot2, kInvRoot2, kInvRoot2), cap));
}

int matrices_needed_for_cap(int cap) { return cap / 2 + 1; }

TriSeries lambda_lhs(int cap, const MatrixList& matrices) {
  TriSeries s(cap);
  for (int n = 1; 2 * n - 2 <= cap; ++n) {
    const DeltaMatrix& M = matrix(matrices, n);
    for (int m = 2; m <= 2 * n; ++m) {
      for (int k = 1; k < m; ++k) {
        const int a = m - k - 1, b = k - 1, c = 2 * n - m;
        const BigInt den = series::factorial(a) * series::factorial(b) * series::factorial(c);
        if (M.at(m, k) != 0) s.add_to(a, b, c, rational(M.at(m, k), den));
      }
    }
  }
  return s;
}

TriSeries omega_lhs(int cap, const MatrixList& matrices) {
  TriSeries s(cap);
  for (int n = 1; 2 * n - 2 <= cap; ++n) {
    const DeltaMatrix& M = matrix(matrices, n);
    for (int m = 1; m <= 2 * n; ++m) {
      for (int k = m + 1; k <= 2 * n; ++k) {
        const int a = 2 * n - k, b = k - m - 1, c = m - 1;
        const BigInt den = series::factorial(a) * series::factorial(b) * series::factorial(c);
        if (M.at(m, k) != 0) s.add_to(a, b, c, rational(M.at(m, k), den));
      }
    }
  }
  return s;
}

Grid reindex_lambda(int p, int size, const MatrixList& matrices) {
  if (p < 0 || size < 0) throw std::invalid_argument("p and size must be nonnegative");
  Grid g(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) g.at(i, j) = lambda_entry(p, i, j, matrices);
  return g;
}

Grid reindex_omega(int p, int size, const MatrixList& matrices) {
  if (p < 0 || size < 0) throw std::invalid_argument("p and size must be nonnegative");
  Grid g(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) g.at(i, j) = omega_entry(p, i, j, matrices);
  return g;
}

int matrices_needed_for_reindex(int p, int size) {
  if (size < 1) return 1;
  return (p + 2 * (size - 1) + 2) / 2;
}

int matrices_needed_for_closed_forms(int cap, int p_max) {
  return std::max(matrices_needed_for_reindex(1, cap + 1 + p_max),
                  matrices_needed_for_reindex(p_max, cap + 1));
}

TriSeries grid_egf(const Grid& g, int cap) {
  TriSeries s(cap);
  for (int i = 0; i < g.rows() && i <= cap; ++i)
    for (int j = 0; j < g.cols() && i + j <= cap; ++j)
      if (g.at(i, j) != 0)
        s.set(i, j, 0, rational(g.at(i, j), series::factorial(i) * series::factorial(j)));
  return s;
}

VerifyReport boundary_relations_check(int p, int size, const MatrixList& matrices) {
  if (p < 1) throw std::invalid_argument("p must be at least 1");
  VerifyReport report;
  {
    Check c("lambda-boundary-columns");
    c.p(p);
    for (int i = 0; i < size; ++i) {
      const BigInt a = lambda_entry(p, i, 0, matrices);
      const BigInt b = lambda_entry(1, i, p - 1, matrices);
      c.expect(a == b, [&] {
        return "i=" + std::to_string(i) + " column 0: " + to_decimal(a) + " vs " + to_decimal(b);
      });
      const BigInt a1 = lambda_entry(p, i, 1, matrices);
      const BigInt b1 = lambda_entry(1, i + 1, p - 1, matrices) + lambda_entry(1, i, p, matrices);
      c.expect(a1 == b1, [&] {
        return "i=" + std::to_string(i) + " column 1: " + to_decimal(a1) + " vs " + to_decimal(b1);
      });
    }
    c.note("size " + std::to_string(size));
    report.add(c.finish());
  }
  {
    Check c("omega-boundary-row");
    c.p(p);
    for (int j = 0; j < size; ++j) {
      const BigInt a = omega_entry(p, 1, j, matrices);
      const BigInt b = omega_entry(1, p, j, matrices);
      c.expect(a == b, [&] {
        return "j=" + std::to_string(j) + ": " + to_decimal(a) + " vs " + to_decimal(b);
      });
    }
    c.note("size " + std::to_string(size));
    report.add(c.finish());
  }
  return report;
}

VerifyReport lambda1_closed_forms(int cap, int p_max, const MatrixList& matrices) {
  if (cap < 2) throw std::invalid_argument("cap must be at least 2");
  const RootTwoScalar r2 = RootTwoScalar::sqrt2();
  const int size = cap + 1;
  VerifyReport report;

  const Grid lambda1 = reindex_lambda(1, size + p_max, matrices);
  const TriSeries lambda1_egf = grid_egf(lambda1, cap);

  const TriSeries quotient = series::cos_series(form(kInvRoot2, -kInvRoot2, 0), cap) *
                             series::reciprocal(series::cos_series(form(kInvRoot2, kInvRoot2, 0), cap));
  const TriSeries half_angle =
      (series::cos_series(form(r2, 0, 0), cap) + series::cos_series(form(0, r2, 0), cap)) *
      series::reciprocal(two_cos_squared(form(kInvRoot2, kInvRoot2, 0), cap));
  {
    Check c("lambda1-quotient-form");
    c.cap(cap);
    expect_equal(c, quotient, lambda1_egf);
    report.add(c.finish());
  }
  {
    Check c("lambda1-sine-form");
    c.cap(cap);
    const TriSeries lhs = quotient * series::sin_series(form(r2, r2, 0), cap);
    const TriSeries rhs = series::sin_series(form(r2, 0, 0), cap) + series::sin_series(form(0, r2, 0), cap);
    expect_equal(c, lhs, rhs);
    expect_equal(c, lambda1_egf * series::sin_series(form(r2, r2, 0), cap), rhs);
    report.add(c.finish());
  }
  {
    Check c("lambda1-half-angle-form");
    c.cap(cap);
    expect_equal(c, half_angle, quotient);
    expect_equal(c, half_angle, lambda1_egf);
    report.add(c.finish());
  }
  {
    Check c("lambda1-initial-values");
    c.cap(cap);
    for (int d = 0; d <= cap; ++d) {
      const RootTwoScalar want = d == 0 ? RootTwoScalar(1) : RootTwoScalar();
      c.expect(lambda1_egf.coeff(d, 0, 0) == want && lambda1_egf.coeff(0, d, 0) == want,
               [&] { return "degree " + std::to_string(d) + " on an axis"; });
    }
    report.add(c.finish());
  }

  auto column = [&](int j) {
    std::vector<BigInt> seq;
    for (int i = 0; i <= cap; ++i) seq.push_back(lambda1.at(i, j));
    return seq;
  };
  const LinearForm x_plus_y = form(1, 1, 0);
  for (int p = 1; p <= p_max; ++p) {
    Check c("lambda-p-column-form");
    c.p(p).cap(cap);
    const TriSeries lhs = grid_egf(reindex_lambda(p, size, matrices), cap);
    const TriSeries rhs =
        egf_of(column(p - 1), x_plus_y, cap) * series::cos_series(form(0, r2, 0), cap) +
        kInvRoot2 * (egf_of(column(p), x_plus_y, cap) * series::sin_series(form(0, r2, 0), cap));
    expect_equal(c, lhs, rhs);
    report.add(c.finish());
  }

  {
    Check c("omega1-closed-form");
    c.cap(cap);
    const TriSeries closed = kInvRoot2 * (series::sin_series(form(r2, 0, 0), cap) *
                                          series::reciprocal(series::cos_series(form(kInvRoot2, kInvRoot2, 0), cap) *
                                                             series::cos_series(form(kInvRoot2, kInvRoot2, 0), cap)));
    expect_equal(c, grid_egf(reindex_omega(1, size, matrices), cap), closed);
    report.add(c.finish());
  }
  for (int p = 1; p <= p_max; ++p) {
    Check c("omega-p-row-form");
    c.p(p).cap(cap);
    const Grid omega = reindex_omega(p, size, matrices);
    std::vector<BigInt> row;
    for (int j = 0; j <= cap; ++j) row.push_back(omega.at(1, j));
    const TriSeries rhs =
        kInvRoot2 * (series::sin_series(form(r2, 0, 0), cap) * egf_of(row, x_plus_y, cap));
    expect_equal(c, grid_egf(omega, cap), rhs);
    report.add(c.finish());
  }
  return report;
}

}  // namespace treecalc
