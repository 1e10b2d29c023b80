#include "treecalc/poupard.hpp"

#include <sstream>
#include <stdexcept>

#include "exact_json.hpp"
#include "treecalc/series.hpp"

namespace treecalc {

BigInt Triangle::at(int n, int m) const {
  if (n < 0 || n > n_max() || m < 1 || m > 2 * n + 1) return 0;
  return rows_[n][m - 1];
}

BigInt Triangle::row_sum(int n) const {
  BigInt s = 0;
  for (const auto& v : row(n)) s += v;
  return s;
}

std::string Triangle::to_json() const {
  std::string out = "{\"rows\":[";
  for (std::size_t n = 0; n < rows_.size(); ++n) {
    if (n) out += ',';
    out += '[';
    for (std::size_t m = 0; m < rows_[n].size(); ++m) {
      if (m) out += ',';
      out += to_decimal(rows_[n][m]);
    }
    out += ']';
  }
  out += "]}";
  return out;
}

Triangle Triangle::from_json(const std::string& text) {
  const auto doc = detail::parse_integer_json(text);
  std::vector<std::vector<BigInt>> rows;
  for (const auto& r : doc.at("rows")) {
    std::vector<BigInt> row;
    for (const auto& v : r) row.push_back(detail::integer_value(v));
    rows.push_back(std::move(row));
  }
  return Triangle(std::move(rows));
}

std::string Triangle::to_bfile() const {
  std::ostringstream os;
  long index = 0;
  for (const auto& r : rows_)
    for (const auto& v : r) os << index++ << ' ' << to_decimal(v) << '\n';
  return os.str();
}

Triangle poupard_triangle(int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  std::vector<std::vector<BigInt>> rows;
  rows.push_back({1});
  for (int n = 1; n <= n_max; ++n) {
    const auto& prev = rows.back();
    std::vector<BigInt> row(2 * n + 1);
    row[0] = 0;
    for (const auto& v : prev) row[1] += v;
    auto prev_at = [&](int m) -> BigInt {
      return m >= 1 && m <= static_cast<int>(prev.size()) ? prev[m - 1] : BigInt(0);
    };
    // f(m+2) = 2 f(m+1) - f(m) - 2 f_{n-1}(m), 1-based m
    for (int m = 1; m + 2 <= 2 * n + 1; ++m)
      row[m + 1] = 2 * row[m] - row[m - 1] - 2 * prev_at(m);
    rows.push_back(std::move(row));
  }
  return Triangle(std::move(rows));
}

std::vector<BigInt> tangent_numbers(int count) {
  if (count < 1) throw std::invalid_argument("count must be positive");
  using namespace series;
  const int cap = 2 * count - 1;
  const LinearForm u{1, 0, 0};
  const TriSeries tan = sin_series(u, cap) * reciprocal(cos_series(u, cap));
  std::vector<BigInt> out;
  for (int d = 1; d <= cap; d += 2) {
    const RootTwoScalar& c = tan.coeff(d, 0, 0);
    Rational v = c.rational_part() * Rational(factorial(d));
    if (!c.is_rational() || v.get_den() != 1)
      throw std::logic_error("tangent coefficient is not an integer");
    out.push_back(v.get_num());
  }
  return out;
}

std::optional<PoupardViolation> poupard_violation(const Grid& g) {
  for (int i = 0; i + 2 < g.rows(); ++i) {
    for (int j = 0; j + 2 < g.cols(); ++j) {
      BigInt r = g.at(i, j + 2) - 2 * g.at(i + 1, j + 1) + g.at(i + 2, j) + 2 * g.at(i, j);
      if (r != 0) return PoupardViolation{i, j, r};
    }
  }
  return std::nullopt;
}

}  // namespace treecalc
