#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "treecalc/grid.hpp"
#include "treecalc/report.hpp"

namespace treecalc {

/// f_n(m, k) on [1, 2n]^2, 1-based; zero outside the square.
class DeltaMatrix {
 public:
  DeltaMatrix() = default;
  // grid must be (2n)x(2n); cell (m-1, k-1) holds f_n(m, k).
  DeltaMatrix(int n, Grid grid);

  // M_1 = [[0,0],[1,0]].
  static DeltaMatrix first();

  int n() const { return n_; }
  int size() const { return 2 * n_; }
  const Grid& grid() const { return grid_; }

  const BigInt& at(int m, int k) const { return grid_.get_or_zero(m - 1, k - 1); }
  // f_n(m, .) and f_n(., k); zero outside 1..2n.
  const BigInt& row_sum(int m) const;
  const BigInt& col_sum(int k) const;
  const BigInt& total() const { return total_; }

  friend bool operator==(const DeltaMatrix& a, const DeltaMatrix& b) {
    return a.n_ == b.n_ && a.grid_ == b.grid_;
  }

 private:
  int n_ = 0;
  Grid grid_;
  std::vector<BigInt> rows_;
  std::vector<BigInt> cols_;
  BigInt total_;
};

enum class Recurrence { R1, R2, R3, R4 };
enum class Boundary { I1, I2, I3, I4, SW, NE };

const char* to_string(Recurrence r);
const char* to_string(Boundary b);

struct BuildStrategy {
  std::string tag;
  std::vector<Recurrence> recurrences;
  std::vector<Boundary> boundary;

  // D1..D9 in order.
  static const std::vector<BuildStrategy>& catalog();
  // Accepts "d1".."d9", case-insensitive; throws std::invalid_argument.
  static const BuildStrategy& parse(const std::string& tag);
};

enum class Region { L1, L2, U1, U2 };

const char* to_string(Region r);
bool in_region(Region r, int n, int m, int k);

struct KnownCell {
  int m;
  int k;
  BigInt value;
};

/// Cells fixed by one boundary family, from the marginals of prev = M_{n-1}.
std::vector<KnownCell> boundary_cells(int n, Boundary b, const DeltaMatrix& prev);

class SolveError : public std::runtime_error {
 public:
  enum class Kind { unresolved, inconsistent };
  SolveError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Fills M_n by repeatedly solving recurrence instances with one unknown
/// cell. The diagonal is always known to be zero.
DeltaMatrix solve_constraints(int n, const std::vector<KnownCell>& known,
                              const std::vector<Recurrence>& recurrences, const DeltaMatrix& prev);

DeltaMatrix build_next(const DeltaMatrix& prev, const BuildStrategy& strategy);
DeltaMatrix build_matrix(int n, const BuildStrategy& strategy);
/// M_1..M_{n_max}.
std::vector<DeltaMatrix> build_sequence(int n_max, const BuildStrategy& strategy);

/// Recurrence residual at (m, k); zero when the relation holds there.
BigInt recurrence_residual(Recurrence r, const DeltaMatrix& M, const DeltaMatrix& prev, int m,
                           int k);
Region recurrence_region(Recurrence r);

/// Symmetry, diagonals, crossing and marginal checks on one matrix. prev is
/// M_{n-1}; the marginal recurrence is skipped without it.
VerifyReport matrix_properties_check(const DeltaMatrix& M, const std::optional<DeltaMatrix>& prev);

/// g_n(m, k) = f_n(m, 2n+1-k); throws std::logic_error if g is not symmetric.
Grid eoc_pom_polynomial(const DeltaMatrix& M);

// JSON {"n":1,"rows":[[0,0],[1,0]]}, CSV rows, and right-aligned text.
std::string to_json(const DeltaMatrix& M);
std::string to_csv(const DeltaMatrix& M);
std::string to_pretty(const DeltaMatrix& M);
DeltaMatrix matrix_from_json(const std::string& text);
DeltaMatrix matrix_from_csv(const std::string& text);

}  // namespace treecalc
