#include "treecalc/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <set>
#include <sstream>
#include <unordered_set>

#include "treecalc/delta.hpp"
#include "treecalc/generating.hpp"
#include "treecalc/poupard.hpp"
#include "treecalc/trees.hpp"

namespace treecalc {

namespace {

std::vector<DeltaMatrix> reference(int n_max) {
  return build_sequence(std::max(n_max, 1), BuildStrategy::catalog().front());
}

std::string first_cell_difference(const DeltaMatrix& got, const Grid& want, const char* got_label,
                                  const char* want_label) {
  if (want.rows() != got.size() || want.cols() != got.size())
    return std::string(want_label) + " is " + std::to_string(want.rows()) + "x" +
           std::to_string(want.cols());
  for (int m = 1; m <= got.size(); ++m)
    for (int k = 1; k <= got.size(); ++k)
      if (got.at(m, k) != want.at(m - 1, k - 1))
        return "f(" + std::to_string(m) + "," + std::to_string(k) + "): " + got_label + " " +
               to_decimal(got.at(m, k)) + ", " + want_label + " " + to_decimal(want.at(m - 1, k - 1));
  return "";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

template <class Body>
CheckRecord guarded(Check c, Body&& body) {
  try {
    body(c);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  return c.finish();
}

}  // namespace

const std::vector<std::string>& check_suites() {
  static const std::vector<std::string> all{
      "golden",    "equivalence", "enumeration", "symmetry", "diagonals", "crossing",
      "marginals", "bijection",   "census",      "gf",       "poupard-matrices", "closed-forms"};
  return all;
}

VerifyReport verify_golden(int n_max, const std::string& golden_dir) {
  namespace fs = std::filesystem;
  VerifyReport report;
  const auto built = reference(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const fs::path path = fs::path(golden_dir) / ("m" + std::to_string(n) + ".json");
    Check c("golden-matrix");
    c.n(n);
    if (!fs::exists(path)) {
      c.skip("no fixture " + path.filename().string());
      report.add(c.finish());
      continue;
    }
    report.add(guarded(std::move(c), [&](Check& ck) {
      const DeltaMatrix fixture = matrix_from_json(read_file(path));
      ck.expect(fixture.n() == n, [&] { return "fixture declares n=" + std::to_string(fixture.n()); });
      const std::string diff = first_cell_difference(built[n - 1], fixture.grid(), "built", "fixture");
      ck.expect(diff.empty(), [&] { return diff; });
    }));
  }
  report.add(guarded(Check("golden-triangle"), [&](Check& ck) {
    const Triangle fixture = Triangle::from_json(read_file(fs::path(golden_dir) / "triangle.json"));
    const Triangle computed = poupard_triangle(fixture.n_max());
    for (int n = 0; n <= fixture.n_max(); ++n)
      ck.expect(fixture.row(n) == computed.row(n), [&] { return "row " + std::to_string(n) + " differs"; });
    ck.note("rows 0.." + std::to_string(fixture.n_max()));
  }));
  report.add(guarded(Check("golden-tree-pair"), [&](Check& ck) {
    std::istringstream in(read_file(fs::path(golden_dir) / "tree_pair.txt"));
    std::string a, b;
    std::getline(in, a);
    std::getline(in, b);
    const Tree left = Tree::parse(a), right = Tree::parse(b);
    const Tree mapped = ha12_map(left);
    ck.expect(mapped == right, [&] { return "map gives " + mapped.serialize(); });
    ck.expect(eoc(left) == 7 && pom(left) == 4 && pom(right) == 6, [&] {
      return "eoc(left)=" + std::to_string(eoc(left)) + " pom(left)=" + std::to_string(pom(left)) +
             " pom(right)=" + std::to_string(pom(right));
    });
  }));
  return report;
}

VerifyReport verify_equivalence(int n_max) {
  VerifyReport report;
  const auto ref = reference(n_max);
  for (const auto& strategy : BuildStrategy::catalog()) {
    Check c("equivalence-" + strategy.tag);
    c.n(n_max);
    report.add(guarded(std::move(c), [&](Check& ck) {
      try {
        const auto seq = build_sequence(n_max, strategy);
        for (int n = 1; n <= n_max; ++n) {
          const std::string diff = first_cell_difference(seq[n - 1], ref[n - 1].grid(), strategy.tag.c_str(), "d1");
          ck.expect(diff.empty(), [&] { return "n=" + std::to_string(n) + " " + diff; });
        }
      } catch (const SolveError& e) {
        ck.fail(std::string(e.kind() == SolveError::Kind::unresolved ? "unresolved: " : "inconsistent: ") +
                e.what());
      }
    }));
  }
  for (int n = 2; n <= n_max; ++n) {
    Check c("boundary-conditions");
    c.n(n);
    const DeltaMatrix& M = ref[n - 1];
    for (Boundary b : {Boundary::I1, Boundary::I2, Boundary::I3, Boundary::I4, Boundary::SW, Boundary::NE})
      for (const auto& cell : boundary_cells(n, b, ref[n - 2]))
        c.expect(M.at(cell.m, cell.k) == cell.value, [&] {
          return std::string(to_string(b)) + " at (" + std::to_string(cell.m) + "," +
                 std::to_string(cell.k) + "): " + to_decimal(M.at(cell.m, cell.k)) + " vs " +
                 to_decimal(cell.value);
        });
    report.add(c.finish());
  }
  for (int n = 1; n <= n_max; ++n) {
    Check c("count-identity");
    c.n(n);
    report.add(guarded(std::move(c), [&](Check& ck) {
      const BigInt tangent = tangent_numbers(n + 1).back();
      BigInt power = 1;
      power <<= n;
      ck.expect(tangent % power == 0, [&] { return "T_" + std::to_string(2 * n + 1) + " not divisible by 2^n"; });
      ck.expect(ref[n - 1].total() == tangent / power, [&] {
        return "total " + to_decimal(ref[n - 1].total()) + " vs " + to_decimal(tangent / power);
      });
      ck.note("total=" + to_decimal(ref[n - 1].total()));
    }));
  }
  return report;
}

VerifyReport verify_enumeration(int n_max) {
  VerifyReport report;
  const auto ref = reference(n_max);
  std::string totals;
  for (int n = 1; n <= n_max; ++n) {
    Check c("enumeration");
    c.n(n);
    report.add(guarded(std::move(c), [&](Check& ck) {
      unsigned long long count = 0;
      bool structure_ok = true;
      std::string bad;
      enumerate_trees(n, [&](const Tree& t) {
        ++count;
        if (!structure_ok) return;
        try {
          const Tree copy(t.n(), t.children_map());
          if (!(copy == t)) throw InvalidTree("canonical form mismatch");
          int leaves = 0;
          for (int l = 1; l <= t.max_label(); ++l) leaves += t.is_leaf(l);
          if (leaves != n + 1) throw InvalidTree("leaf count " + std::to_string(leaves));
          if (eoc(t) < 2 || eoc(t) > 2 * n || pom(t) < 1 || pom(t) > 2 * n - 1 || eoc(t) == pom(t))
            throw InvalidTree("statistics out of range");
        } catch (const InvalidTree& e) {
          structure_ok = false;
          bad = t.serialize() + ": " + e.what();
        }
      });
      ck.expect(structure_ok, [&] { return bad; });
      const BigInt expected = tree_count(n);
      ck.expect(BigInt(static_cast<unsigned long>(count)) == expected,
                [&] { return "enumerated " + std::to_string(count) + ", expected " + to_decimal(expected); });
      const Grid counts = joint_distribution(n, n);
      const std::string diff = first_cell_difference(ref[n - 1], counts, "built", "enumerated");
      ck.expect(diff.empty(), [&] { return diff; });
      ck.note("trees=" + std::to_string(count));
      totals += (totals.empty() ? "" : ",") + std::to_string(count);
    }));
  }
  Check c("enumeration-totals");
  c.note(totals);
  report.add(c.finish());
  return report;
}

VerifyReport verify_symmetry(int n_max) {
  VerifyReport report;
  const auto ref = reference(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const VerifyReport props = matrix_properties_check(ref[n - 1], std::nullopt);
    for (const auto& r : props.records())
      if (r.name == "symmetry") report.add(r);
    Check c("polynomial-symmetry");
    c.n(n);
    report.add(guarded(std::move(c), [&](Check&) { eoc_pom_polynomial(ref[n - 1]); }));
  }
  return report;
}

VerifyReport verify_matrix_property(const std::string& name, int n_max) {
  VerifyReport report;
  const auto ref = reference(n_max);
  for (int n = 1; n <= n_max; ++n) {
    std::optional<DeltaMatrix> prev;
    if (n > 1) prev = ref[n - 2];
    const VerifyReport props = matrix_properties_check(ref[n - 1], prev);
    for (const auto& r : props.records())
      if (r.name == name || r.name.rfind(name + "-", 0) == 0) report.add(r);
  }
  return report;
}

VerifyReport verify_bijection(int n_max) {
  VerifyReport report;
  for (int n = 1; n <= n_max; ++n) {
    Check c("bijection");
    c.n(n);
    report.add(guarded(std::move(c), [&](Check& ck) {
      std::unordered_set<std::string> images;
      unsigned long long count = 0;
      enumerate_trees(n, [&](const Tree& t) {
        ++count;
        if (!ck.passed()) return;
        try {
          const Tree image = ha12_map(t);
          ck.expect(eoc(t) == pom(image) + 1, [&] {
            return t.serialize() + " maps to " + image.serialize() + ", eoc=" + std::to_string(eoc(t)) +
                   " pom=" + std::to_string(pom(image));
          });
          ck.expect(images.insert(image.serialize()).second,
                    [&] { return "image " + image.serialize() + " reached twice"; });
        } catch (const InvalidTree& e) {
          ck.fail(t.serialize() + " maps to an invalid tree: " + e.what());
        }
      });
      ck.note(std::to_string(images.size()) + " distinct images of " + std::to_string(count) + " trees");
    }));
  }
  return report;
}

VerifyReport verify_census(int n_max, int enumeration_n_max) {
  VerifyReport report;
  const auto ref = reference(n_max);
  for (int n = 2; n <= enumeration_n_max; ++n) {
    Check c("census-identities");
    c.n(n);
    report.add(guarded(std::move(c), [&](Check& ck) {
      const Grid T = joint_distribution(n, n);
      const Grid r1 = census_matrix(n, CensusCondition::r1_witness, n);
      const Grid outside = census_matrix(n, CensusCondition::r2_outside, n);
      const Grid inside = census_matrix(n, CensusCondition::r2_inside, n);
      auto t = [&](int m, int k) { return T.get_or_zero(m - 1, k - 1); };
      const int N = 2 * n;
      for (int m = 1; m <= N; ++m) {
        for (int k = 1; k <= N; ++k) {
          if (in_region(Region::L1, n, m, k) || in_region(Region::U2, n, m, k)) {
            BigInt r = t(m, k) - 2 * t(m + 1, k) + t(m + 2, k) + 2 * r1.at(m - 1, k - 1);
            ck.expect(r == 0, [&] {
              return "row identity at (" + std::to_string(m) + "," + std::to_string(k) + "): " + to_decimal(r);
            });
          }
          if (in_region(Region::L2, n, m, k) || in_region(Region::U1, n, m, k)) {
            BigInt r = t(m, k) - 2 * t(m, k + 1) + t(m, k + 2) +
                       2 * (outside.at(m - 1, k - 1) + inside.at(m - 1, k - 1));
            ck.expect(r == 0, [&] {
              return "column identity at (" + std::to_string(m) + "," + std::to_string(k) + "): " + to_decimal(r);
            });
          }
        }
      }
    }));
  }
  for (int n = 2; n <= n_max; ++n) {
    Check c("census-matrix-identities");
    c.n(n);
    const DeltaMatrix& M = ref[n - 1];
    for (Recurrence rec : {Recurrence::R1, Recurrence::R2, Recurrence::R3, Recurrence::R4})
      for (int m = 1; m <= M.size(); ++m)
        for (int k = 1; k <= M.size(); ++k)
          if (in_region(recurrence_region(rec), n, m, k)) {
            const BigInt r = recurrence_residual(rec, M, ref[n - 2], m, k);
            c.expect(r == 0, [&] {
              return std::string(to_string(rec)) + " at (" + std::to_string(m) + "," +
                     std::to_string(k) + "): " + to_decimal(r);
            });
          }
    report.add(c.finish());
  }
  return report;
}

VerifyReport verify_gf(int cap) {
  using series::Variable;
  VerifyReport report;
  const auto mats = reference(matrices_needed_for_cap(cap));
  const auto lr = lambda_rhs(cap), ll = lambda_lhs(cap, mats);
  const auto orr = omega_rhs(cap), ol = omega_lhs(cap, mats);
  auto add = [&](const char* name, bool ok, const std::string& why) {
    Check c(name);
    c.cap(cap);
    c.expect(ok, [&] { return why; });
    report.add(c.finish());
  };
  add("gf-lambda", ll == lr, "lower-triangle series differs from the trigonometric form");
  add("gf-omega", ol == orr, "upper-triangle series differs from the trigonometric form");
  add("gf-rational", lr.is_rational() && orr.is_rational(), "a coefficient has a nonzero sqrt(2) part");
  add("gf-symmetry",
      ll.swapped(Variable::y, Variable::z) == ll && ol.swapped(Variable::x, Variable::z) == ol &&
          lr.swapped(Variable::y, Variable::z) == lr,
      "series not fixed by the variable exchange");
  return report;
}

VerifyReport verify_poupard_matrices(int p_max, int size) {
  VerifyReport report;
  const int need = std::max(matrices_needed_for_reindex(p_max, size), matrices_needed_for_reindex(1, size + 1));
  const auto mats = reference(need);
  for (int p = 0; p <= p_max; ++p) {
    for (const char* kind : {"lambda", "omega"}) {
      Check c(std::string("poupard-matrix-") + kind);
      c.p(p);
      const Grid g = std::string(kind) == "lambda" ? reindex_lambda(p, size, mats) : reindex_omega(p, size, mats);
      const auto v = poupard_violation(g);
      c.expect(!v, [&] {
        return "(i,j)=(" + std::to_string(v->i) + "," + std::to_string(v->j) + ") residual " +
               to_decimal(v->residual);
      });
      if (p == 0) {
        bool zero = true;
        for (int i = 0; i < size; ++i)
          for (int j = 0; j < size; ++j) zero = zero && g.at(i, j) == 0;
        c.expect(zero, [] { return "p=0 grid is not identically zero"; });
      }
      c.note("size " + std::to_string(size));
      report.add(c.finish());
    }
  }
  for (int p = 1; p <= p_max; ++p) report.merge(boundary_relations_check(p, size, mats));

  report.add(guarded(Check("triangle"), [&](Check& ck) {
    const int n_max = 8;
    const Triangle tri = poupard_triangle(n_max);
    for (int n = 1; n <= n_max; ++n) {
      const auto& row = tri.row(n);
      ck.expect(row.front() == 0 && row.back() == 0, [&] { return "row " + std::to_string(n) + " ends"; });
      ck.expect(std::equal(row.begin(), row.end(), row.rbegin()),
                [&] { return "row " + std::to_string(n) + " not symmetric"; });
      ck.expect(tri.row_sum(n) == tree_count(n), [&] { return "row " + std::to_string(n) + " sum"; });
      for (int m = 1; m <= 2 * n - 1; ++m) {
        BigInt r = tri.at(n, m + 2) - 2 * tri.at(n, m + 1) + tri.at(n, m) + 2 * tri.at(n - 1, m);
        ck.expect(r == 0, [&] { return "difference equation at n=" + std::to_string(n) + " m=" + std::to_string(m); });
      }
    }
  }));
  report.add(guarded(Check("tangent-numbers"), [&](Check& ck) {
    const auto t = tangent_numbers(8);
    const std::vector<BigInt> first{1, 2, 16, 272, 7936};
    ck.expect(std::equal(first.begin(), first.end(), t.begin()), [] { return "first five differ"; });
    for (int k = 1; k <= 8; ++k) {
      BigInt power = 1;
      power <<= (k - 1);
      ck.expect(t[k - 1] % power == 0, [&] { return "T_" + std::to_string(2 * k - 1) + " not divisible"; });
    }
    ck.expect(t[5] / 32 == tree_count(5) && t[6] / 64 == tree_count(6),
              [] { return "T_11/2^5 or T_13/2^6 differs from the tree count"; });
  }));
  return report;
}

VerifyReport verify_closed_forms(int cap, int p_max) {
  const auto mats = reference(matrices_needed_for_closed_forms(cap, p_max));
  return lambda1_closed_forms(cap, p_max, mats);
}

VerifyReport run_verify(const VerifyOptions& o) {
  if (o.n_max < 1) throw std::invalid_argument("n-max must be positive");
  std::set<std::string> chosen;
  for (const auto& name : o.checks) {
    if (name == "all") {
      chosen.insert(check_suites().begin(), check_suites().end());
    } else if (std::find(check_suites().begin(), check_suites().end(), name) != check_suites().end()) {
      chosen.insert(name);
    } else {
      throw std::invalid_argument("unknown check: " + name);
    }
  }

  VerifyReport capped;
  auto limited = [&](const char* suite, int cap) {
    if (o.force || o.n_max <= cap) return o.n_max;
    Check c(std::string(suite) + "-capped");
    c.n(o.n_max);
    c.skip("enumeration stops at n=" + std::to_string(cap) + "; use --force for more");
    capped.add(c.finish());
    return cap;
  };

  std::vector<std::function<VerifyReport()>> jobs;
  const int n = o.n_max;
  if (chosen.count("golden")) jobs.push_back([=] { return verify_golden(n, o.golden_dir); });
  if (chosen.count("equivalence")) jobs.push_back([=] { return verify_equivalence(n); });
  if (chosen.count("enumeration")) {
    const int e = limited("enumeration", o.enumeration_cap);
    jobs.push_back([=] { return verify_enumeration(e); });
  }
  if (chosen.count("symmetry")) jobs.push_back([=] { return verify_symmetry(n); });
  for (const char* name : {"diagonals", "crossing", "marginals"})
    if (chosen.count(name)) jobs.push_back([=] { return verify_matrix_property(name, n); });
  if (chosen.count("bijection")) {
    const int b = limited("bijection", o.bijection_cap);
    jobs.push_back([=] { return verify_bijection(b); });
  }
  if (chosen.count("census")) {
    const int c = limited("census", o.census_cap);
    jobs.push_back([=] { return verify_census(n, c); });
  }
  if (chosen.count("gf")) jobs.push_back([=] { return verify_gf(o.cap); });
  if (chosen.count("poupard-matrices"))
    jobs.push_back([=] { return verify_poupard_matrices(o.p_max, o.reindex_size); });
  if (chosen.count("closed-forms"))
    jobs.push_back([=] { return verify_closed_forms(o.closed_form_cap, o.closed_form_p_max); });

  std::vector<std::future<VerifyReport>> running;
  for (auto& job : jobs) running.push_back(std::async(std::launch::async, job));
  VerifyReport report = capped;
  for (auto& f : running) report.merge(f.get());
  report.sort();
  return report;
}

}  // namespace treecalc
