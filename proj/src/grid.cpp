#include "treecalc/grid.hpp"

#include <stdexcept>

namespace treecalc {

namespace {
const BigInt kZero{0};
}

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

Grid::Grid(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("grid dimensions must be nonnegative");
  cells_.assign(static_cast<std::size_t>(rows) * cols, BigInt{0});
}

const BigInt& Grid::get_or_zero(int r, int c) const {
  return contains(r, c) ? at(r, c) : kZero;
}

BigInt Grid::total() const {
  BigInt sum = 0;
  for (const auto& v : cells_) sum += v;
  return sum;
}

bool operator==(const Grid& a, const Grid& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
}

}  // namespace treecalc
