#include "treecalc/delta.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>

#include "treecalc/poupard.hpp"

namespace treecalc {

namespace {
const BigInt kZero{0};
}

DeltaMatrix::DeltaMatrix(int n, Grid grid) : n_(n), grid_(std::move(grid)) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (grid_.rows() != 2 * n || grid_.cols() != 2 * n)
    throw std::invalid_argument("matrix for n=" + std::to_string(n) + " must be " +
                                std::to_string(2 * n) + "x" + std::to_string(2 * n));
  rows_.assign(2 * n, 0);
  cols_.assign(2 * n, 0);
  for (int r = 0; r < 2 * n; ++r) {
    for (int c = 0; c < 2 * n; ++c) {
      rows_[r] += grid_.at(r, c);
      cols_[c] += grid_.at(r, c);
    }
  }
  total_ = 0;
  for (const auto& v : rows_) total_ += v;
}

DeltaMatrix DeltaMatrix::first() {
  Grid g(2, 2);
  g.at(1, 0) = 1;
  return DeltaMatrix(1, std::move(g));
}

const BigInt& DeltaMatrix::row_sum(int m) const {
  return m >= 1 && m <= size() ? rows_[m - 1] : kZero;
}

const BigInt& DeltaMatrix::col_sum(int k) const {
  return k >= 1 && k <= size() ? cols_[k - 1] : kZero;
}

const char* to_string(Recurrence r) {
  switch (r) {
    case Recurrence::R1: return "R1";
    case Recurrence::R2: return "R2";
    case Recurrence::R3: return "R3";
    case Recurrence::R4: return "R4";
  }
  return "?";
}

const char* to_string(Boundary b) {
  switch (b) {
    case Boundary::I1: return "I1";
    case Boundary::I2: return "I2";
    case Boundary::I3: return "I3";
    case Boundary::I4: return "I4";
    case Boundary::SW: return "SW";
    case Boundary::NE: return "NE";
  }
  return "?";
}

const char* to_string(Region r) {
  switch (r) {
    case Region::L1: return "L1";
    case Region::L2: return "L2";
    case Region::U1: return "U1";
    case Region::U2: return "U2";
  }
  return "?";
}

const std::vector<BuildStrategy>& BuildStrategy::catalog() {
  using R = Recurrence;
  using B = Boundary;
  static const std::vector<BuildStrategy> all{
      {"d1", {R::R1, R::R2}, {B::I1, B::I2}},
      {"d2", {R::R3, R::R4}, {B::I3, B::I4}},
      {"d3", {R::R1, R::R3}, {B::I2, B::I3}},
      {"d4", {R::R2, R::R4}, {B::I1, B::I4}},
      {"d5", {R::R1, R::R3, R::R4}, {B::SW, B::I3}},
      {"d6", {R::R1, R::R2, R::R4}, {B::SW, B::I1}},
      {"d7", {R::R1, R::R2, R::R3}, {B::NE, B::I2}},
      {"d8", {R::R2, R::R3, R::R4}, {B::NE, B::I4}},
      {"d9", {R::R1, R::R2, R::R3, R::R4}, {B::SW, B::NE}},
  };
  return all;
}

const BuildStrategy& BuildStrategy::parse(const std::string& tag) {
  std::string lower = tag;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& s : catalog())
    if (s.tag == lower) return s;
  throw std::invalid_argument("unknown strategy: " + tag);
}

bool in_region(Region r, int n, int m, int k) {
  const int N = 2 * n;
  switch (r) {
    case Region::L1: return 2 <= k + 1 && k + 1 <= m && m <= N - 2;
    case Region::L2: return 4 <= k + 3 && k + 3 <= m && m <= N;
    case Region::U1: return 2 <= m + 1 && m + 1 <= k && k <= N - 2;
    case Region::U2: return 4 <= m + 3 && m + 3 <= k && k <= N;
  }
  return false;
}

std::vector<KnownCell> boundary_cells(int n, Boundary b, const DeltaMatrix& prev) {
  const int N = 2 * n;
  auto rs = [&](int m) { return prev.row_sum(m); };
  auto cs = [&](int k) { return prev.col_sum(k); };
  std::vector<KnownCell> out;
  switch (b) {
    case Boundary::I1:
      for (int m = 1; m <= N; ++m) {
        out.push_back({m, N, 0});
        out.push_back({m, N - 1, m <= N - 2 ? rs(m) : kZero});
      }
      break;
    case Boundary::I2:
      for (int k = 1; k <= N; ++k) {
        out.push_back({N, k, k <= N - 2 ? rs(k) : kZero});
        out.push_back({N - 1, k, k <= N - 2 ? BigInt(rs(k) + cs(k)) : kZero});
      }
      break;
    case Boundary::I3:
      for (int k = 1; k <= N; ++k) {
        out.push_back({1, k, 0});
        out.push_back({2, k, k >= 2 ? rs(k - 1) : kZero});
      }
      break;
    case Boundary::I4:
      for (int m = 1; m <= N; ++m) {
        out.push_back({m, 1, m >= 2 ? rs(m - 1) : kZero});
        out.push_back({m, 2, m >= 3 ? BigInt(rs(m - 1) + rs(m - 2)) : kZero});
      }
      break;
    case Boundary::SW:
      out.push_back({N - 1, 1, cs(1)});
      out.push_back({N - 1, 2, rs(2) + cs(2)});
      out.push_back({N, 1, 0});
      out.push_back({N, 2, cs(1)});
      break;
    case Boundary::NE:
      out.push_back({1, N - 1, 0});
      out.push_back({1, N, 0});
      out.push_back({2, N - 1, rs(2)});
      out.push_back({2, N, 0});
      break;
  }
  return out;
}

Region recurrence_region(Recurrence r) {
  switch (r) {
    case Recurrence::R1: return Region::L1;
    case Recurrence::R2: return Region::U1;
    case Recurrence::R3: return Region::U2;
    case Recurrence::R4: return Region::L2;
  }
  return Region::L1;
}

namespace {

struct Instance {
  std::array<int, 3> cells;  // 1-based (m, k) packed as (m-1)*N + (k-1)
  BigInt constant;
};

// Three cells with coefficients 1, -2, 1 plus a constant, for (m, k) in the region.
Instance make_instance(Recurrence r, int n, const DeltaMatrix& prev, int m, int k) {
  const int N = 2 * n;
  auto id = [N](int mm, int kk) { return (mm - 1) * N + (kk - 1); };
  switch (r) {
    case Recurrence::R1: return {{id(m, k), id(m + 1, k), id(m + 2, k)}, 2 * prev.at(m, k)};
    case Recurrence::R2: return {{id(m, k), id(m, k + 1), id(m, k + 2)}, 2 * prev.at(m, k)};
    case Recurrence::R3: return {{id(m, k), id(m + 1, k), id(m + 2, k)}, 2 * prev.at(m, k - 2)};
    case Recurrence::R4: return {{id(m, k), id(m, k + 1), id(m, k + 2)}, 2 * prev.at(m - 2, k)};
  }
  throw std::logic_error("unknown recurrence");
}

std::string cell_name(int N, int id) {
  return "(" + std::to_string(id / N + 1) + "," + std::to_string(id % N + 1) + ")";
}

}  // namespace

BigInt recurrence_residual(Recurrence r, const DeltaMatrix& M, const DeltaMatrix& prev, int m,
                           int k) {
  const Instance inst = make_instance(r, M.n(), prev, m, k);
  const int N = M.size();
  auto val = [&](int id) { return M.at(id / N + 1, id % N + 1); };
  return val(inst.cells[0]) - 2 * val(inst.cells[1]) + val(inst.cells[2]) + inst.constant;
}

DeltaMatrix solve_constraints(int n, const std::vector<KnownCell>& known,
                              const std::vector<Recurrence>& recurrences, const DeltaMatrix& prev) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (prev.n() != n - 1 && !(n == 1 && prev.n() == 0))
    throw std::invalid_argument("previous matrix must be M_{n-1}");
  const int N = 2 * n;
  Grid grid(N, N);
  std::vector<char> is_known(N * N, 0);

  auto assign = [&](int id, const BigInt& v, const char* source) {
    if (is_known[id]) {
      if (grid.at(id / N, id % N) != v)
        throw SolveError(SolveError::Kind::inconsistent,
                         std::string(source) + " sets " + cell_name(N, id) + " to " +
                             to_decimal(v) + " but it is already " +
                             to_decimal(grid.at(id / N, id % N)));
      return false;
    }
    grid.at(id / N, id % N) = v;
    is_known[id] = 1;
    return true;
  };

  for (int i = 1; i <= N; ++i) assign((i - 1) * N + (i - 1), 0, "diagonal");
  for (const auto& c : known) {
    if (c.m < 1 || c.m > N || c.k < 1 || c.k > N)
      throw std::invalid_argument("known cell out of bounds");
    assign((c.m - 1) * N + (c.k - 1), c.value, "boundary");
  }

  std::vector<Instance> instances;
  for (Recurrence r : recurrences)
    for (int m = 1; m <= N; ++m)
      for (int k = 1; k <= N; ++k)
        if (in_region(recurrence_region(r), n, m, k)) instances.push_back(make_instance(r, n, prev, m, k));

  std::vector<std::vector<int>> touching(N * N);
  std::vector<int> unknown(instances.size(), 0);
  std::deque<int> queue;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (int id : instances[i].cells) {
      touching[id].push_back(static_cast<int>(i));
      if (!is_known[id]) ++unknown[i];
    }
    if (unknown[i] <= 1) queue.push_back(static_cast<int>(i));
  }

  static constexpr int kCoeff[3] = {1, -2, 1};
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    const Instance& inst = instances[i];
    BigInt sum = inst.constant;
    int hole = -1;
    for (int s = 0; s < 3; ++s) {
      const int id = inst.cells[s];
      if (is_known[id])
        sum += kCoeff[s] * grid.at(id / N, id % N);
      else
        hole = s;
    }
    if (hole < 0) {
      if (sum != 0)
        throw SolveError(SolveError::Kind::inconsistent,
                         "relation through " + cell_name(N, inst.cells[0]) + " has residual " +
                             to_decimal(sum));
      continue;
    }
    // kCoeff[hole] * x + sum = 0
    const BigInt num = -sum;
    if (num % kCoeff[hole] != 0)
      throw SolveError(SolveError::Kind::inconsistent,
                       "non-integral value at " + cell_name(N, inst.cells[hole]));
    const int id = inst.cells[hole];
    assign(id, num / kCoeff[hole], "relation");
    for (int j : touching[id])
      if (--unknown[j] <= 1) queue.push_back(j);
  }

  std::vector<std::string> missing;
  for (int id = 0; id < N * N; ++id)
    if (!is_known[id]) missing.push_back(cell_name(N, id));
  if (!missing.empty()) {
    std::string list;
    for (std::size_t i = 0; i < missing.size() && i < 6; ++i) list += (i ? " " : "") + missing[i];
    if (missing.size() > 6) list += " ...";
    throw SolveError(SolveError::Kind::unresolved,
                     std::to_string(missing.size()) + " cells undetermined for n=" +
                         std::to_string(n) + ": " + list);
  }
  return DeltaMatrix(n, std::move(grid));
}

DeltaMatrix build_next(const DeltaMatrix& prev, const BuildStrategy& strategy) {
  const int n = prev.n() + 1;
  std::vector<KnownCell> known;
  for (Boundary b : strategy.boundary) {
    auto cells = boundary_cells(n, b, prev);
    known.insert(known.end(), cells.begin(), cells.end());
  }
  return solve_constraints(n, known, strategy.recurrences, prev);
}

std::vector<DeltaMatrix> build_sequence(int n_max, const BuildStrategy& strategy) {
  if (n_max < 1) throw std::invalid_argument("n must be positive");
  std::vector<DeltaMatrix> out{DeltaMatrix::first()};
  while (static_cast<int>(out.size()) < n_max) out.push_back(build_next(out.back(), strategy));
  return out;
}

DeltaMatrix build_matrix(int n, const BuildStrategy& strategy) {
  return build_sequence(n, strategy).back();
}

// ---------------------------------------------------------------------------

VerifyReport matrix_properties_check(const DeltaMatrix& M, const std::optional<DeltaMatrix>& prev) {
  const int n = M.n();
  const int N = M.size();
  if (prev && prev->n() != n - 1) throw std::invalid_argument("prev must be M_{n-1}");
  auto f = [&](int m, int k) -> const BigInt& { return M.at(m, k); };
  auto cell = [&](int m, int k) {
    return "f(" + std::to_string(m) + "," + std::to_string(k) + ")=" + to_decimal(f(m, k));
  };
  VerifyReport report;

  {
    Check c("symmetry");
    c.n(n);
    for (int m = 1; m <= N && c.passed(); ++m)
      for (int k = 1; k <= N; ++k)
        c.expect(f(m, k) == f(N + 1 - k, N + 1 - m),
                 [&] { return cell(m, k) + " but " + cell(N + 1 - k, N + 1 - m); });
    report.add(c.finish());
  }

  {
    Check c("diagonals");
    c.n(n);
    if (n < 2) {
      c.skip("sub/super-diagonal equality is stated for n >= 2");
    } else {
      for (int k = 1; k <= N - 1; ++k)
        c.expect(f(k + 1, k) == f(k, k + 1), [&] { return cell(k + 1, k) + " but " + cell(k, k + 1); });
    }
    report.add(c.finish());
  }

  {
    Check c("crossing");
    c.n(n);
    for (int k = 2; k <= N - 1; ++k) {
      const BigInt a = f(k + 1, k - 1) + f(k - 1, k + 1);
      const BigInt b = f(k + 1, k) + f(k - 1, k);
      const BigInt d = f(k, k + 1) + f(k, k - 1);
      c.expect(a == b && b == d, [&] {
        return "k=" + std::to_string(k) + ": " + to_decimal(a) + ", " + to_decimal(b) + ", " +
               to_decimal(d);
      });
    }
    report.add(c.finish());
  }

  {
    Check c("marginals");
    c.n(n);
    const Triangle tri = poupard_triangle(n);
    for (int m = 1; m <= N; ++m)
      c.expect(M.row_sum(m) == tri.at(n, m), [&] {
        return "row " + std::to_string(m) + " sums to " + to_decimal(M.row_sum(m)) +
               ", triangle has " + to_decimal(tri.at(n, m));
      });
    for (int k = 1; k <= N; ++k)
      c.expect(M.col_sum(k) == tri.at(n, k + 1), [&] {
        return "column " + std::to_string(k) + " sums to " + to_decimal(M.col_sum(k)) +
               ", triangle has " + to_decimal(tri.at(n, k + 1));
      });
    for (int k = 1; k <= N - 1; ++k)
      c.expect(M.row_sum(k + 1) == M.col_sum(k), [&] {
        return "#{eoc=" + std::to_string(k + 1) + "}=" + to_decimal(M.row_sum(k + 1)) +
               " but #{pom=" + std::to_string(k) + "}=" + to_decimal(M.col_sum(k));
      });
    if (prev) {
      BigInt prev_total = prev->total();
      c.expect(M.row_sum(1) == 0 && M.row_sum(2) == prev_total, [&] {
        return "row sums start " + to_decimal(M.row_sum(1)) + "," + to_decimal(M.row_sum(2)) +
               ", expected 0," + to_decimal(prev_total);
      });
      c.expect(M.col_sum(1) == prev_total,
               [&] { return "column 1 sums to " + to_decimal(M.col_sum(1)); });
      for (int m = 1; m <= N - 1; ++m) {
        BigInt r = M.row_sum(m + 2) - 2 * M.row_sum(m + 1) + M.row_sum(m) + 2 * prev->row_sum(m);
        c.expect(r == 0, [&] { return "row-sum recurrence at m=" + std::to_string(m) + ": " + to_decimal(r); });
      }
      // column sums with f(., 0) = 0
      for (int k = 0; k <= N - 2; ++k) {
        BigInt r = M.col_sum(k + 2) - 2 * M.col_sum(k + 1) + M.col_sum(k) + 2 * prev->col_sum(k);
        c.expect(r == 0, [&] { return "column-sum recurrence at k=" + std::to_string(k) + ": " + to_decimal(r); });
      }
    } else {
      c.note("recurrence against M_{n-1} not evaluated");
    }
    report.add(c.finish());
  }

  if (prev || n == 1) {
    // The factor-2 form of the second initial value is expected to fail.
    Check c("marginals-factor-two-refuted");
    c.n(n);
    const BigInt prev_total = prev ? prev->total() : BigInt(1);
    const BigInt stated = 2 * prev_total;
    c.expect(M.row_sum(2) != stated, [&] {
      return "f(2,.)=" + to_decimal(M.row_sum(2)) + " equals 2*sum=" + to_decimal(stated);
    });
    c.note("f(2,.)=" + to_decimal(M.row_sum(2)) + ", 2*sum f_{n-1}=" + to_decimal(stated) +
           ", sum f_{n-1}=" + to_decimal(prev_total));
    report.add(c.finish());
  }

  return report;
}

Grid eoc_pom_polynomial(const DeltaMatrix& M) {
  const int N = M.size();
  Grid g(N, N);
  for (int m = 1; m <= N; ++m)
    for (int k = 1; k <= N; ++k) g.at(m - 1, k - 1) = M.at(m, N + 1 - k);
  for (int m = 0; m < N; ++m)
    for (int k = 0; k < m; ++k)
      if (g.at(m, k) != g.at(k, m))
        throw std::logic_error("g(" + std::to_string(m + 1) + "," + std::to_string(k + 1) +
                               ") differs from its transpose");
  return g;
}

}  // namespace treecalc
