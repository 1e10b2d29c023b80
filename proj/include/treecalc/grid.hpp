#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace treecalc {

using BigInt = mpz_class;
using Rational = mpq_class;

std::string to_decimal(const BigInt& v);

// Rectangular grid of big integers, 0-based (row, col).
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const BigInt& at(int r, int c) const { return cells_[index(r, c)]; }
  BigInt& at(int r, int c) { return cells_[index(r, c)]; }

  // Zero for any index outside the grid.
  const BigInt& get_or_zero(int r, int c) const;

  bool contains(int r, int c) const { return r >= 0 && c >= 0 && r < rows_ && c < cols_; }

  BigInt total() const;

  friend bool operator==(const Grid& a, const Grid& b);

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> cells_;
};

}  // namespace treecalc
