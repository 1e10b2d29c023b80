#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treecalc/grid.hpp"

namespace treecalc {

/// Rows f_n(1..2n+1) for n = 0..n_max, stored 0-based.
class Triangle {
 public:
  Triangle() = default;
  explicit Triangle(std::vector<std::vector<BigInt>> rows) : rows_(std::move(rows)) {}

  int n_max() const { return static_cast<int>(rows_.size()) - 1; }
  const std::vector<BigInt>& row(int n) const { return rows_.at(n); }
  const std::vector<std::vector<BigInt>>& rows() const { return rows_; }

  // 1-based m; zero outside 1..2n+1.
  BigInt at(int n, int m) const;
  BigInt row_sum(int n) const;

  // {"rows":[[1],[0,1,0],...]}
  std::string to_json() const;
  static Triangle from_json(const std::string& text);
  // "index value" per line, rows read left to right, index from 0.
  std::string to_bfile() const;

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

Triangle poupard_triangle(int n_max);

/// T_1, T_3, ..., T_{2 count - 1}.
std::vector<BigInt> tangent_numbers(int count);

struct PoupardViolation {
  int i;
  int j;
  BigInt residual;
};

/// First (i, j) in row-major order where
/// g(i,j+2) - 2 g(i+1,j+1) + g(i+2,j) + 2 g(i,j) != 0.
std::optional<PoupardViolation> poupard_violation(const Grid& g);
inline bool is_poupard_matrix(const Grid& g) { return !poupard_violation(g); }

}  // namespace treecalc
