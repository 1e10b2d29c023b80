#pragma once

#include <string>
#include <vector>

#include "treecalc/report.hpp"

namespace treecalc {

struct VerifyOptions {
  int n_max = 6;
  std::vector<std::string> checks{"all"};
  int cap = 10;             // generating functions
  int closed_form_cap = 12;
  int p_max = 5;            // reindexed matrices
  int closed_form_p_max = 4;
  int reindex_size = 8;
  bool force = false;       // lift the enumeration cap
  int enumeration_cap = 6;
  int bijection_cap = 5;
  int census_cap = 5;
  std::string golden_dir = TREECALC_DEFAULT_GOLDEN_DIR;
};

/// golden, equivalence, enumeration, symmetry, diagonals, crossing,
/// marginals, bijection, census, gf, poupard-matrices, closed-forms.
const std::vector<std::string>& check_suites();

// Throws std::invalid_argument on an unknown suite name.
VerifyReport run_verify(const VerifyOptions& options);

VerifyReport verify_golden(int n_max, const std::string& golden_dir);
VerifyReport verify_equivalence(int n_max);
VerifyReport verify_enumeration(int n_max);
VerifyReport verify_symmetry(int n_max);
VerifyReport verify_matrix_property(const std::string& name, int n_max);
VerifyReport verify_bijection(int n_max);
VerifyReport verify_census(int n_max, int enumeration_n_max);
VerifyReport verify_gf(int cap);
VerifyReport verify_poupard_matrices(int p_max, int size);
VerifyReport verify_closed_forms(int cap, int p_max);

}  // namespace treecalc
