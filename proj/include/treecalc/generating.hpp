#pragma once

#include <stdexcept>
#include <vector>

#include "treecalc/delta.hpp"
#include "treecalc/report.hpp"
#include "treecalc/series.hpp"

namespace treecalc {

class InsufficientMatrices : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// matrices[i] holds M_{i+1}.
using MatrixList = std::vector<DeltaMatrix>;

// Generating functions of the lower and upper triangles.
series::TriSeries lambda_rhs(int cap);
series::TriSeries omega_rhs(int cap);
series::TriSeries lambda_lhs(int cap, const MatrixList& matrices);
series::TriSeries omega_lhs(int cap, const MatrixList& matrices);

// Smallest n_max whose matrices cover every monomial up to cap.
int matrices_needed_for_cap(int cap);

/// lambda^(p) and omega^(p), top-left size x size.
Grid reindex_lambda(int p, int size, const MatrixList& matrices);
Grid reindex_omega(int p, int size, const MatrixList& matrices);
int matrices_needed_for_reindex(int p, int size);

/// sum g(i,j) x^i y^j / (i! j!) over i + j <= cap.
series::TriSeries grid_egf(const Grid& g, int cap);

VerifyReport boundary_relations_check(int p, int size, const MatrixList& matrices);

int matrices_needed_for_closed_forms(int cap, int p_max);

/// Closed forms of the lambda^(1), lambda^(p) and omega^(p) series.
VerifyReport lambda1_closed_forms(int cap, int p_max, const MatrixList& matrices);

}  // namespace treecalc
