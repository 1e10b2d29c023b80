// treecalc: Delta matrices, Poupard triangles and tree statistics.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treecalc/delta.hpp"
#include "treecalc/generating.hpp"
#include "treecalc/poupard.hpp"
#include "treecalc/trees.hpp"
#include "treecalc/verify.hpp"

namespace {

using namespace treecalc;

constexpr int kUsage = 2;

struct Globals {
  std::string format = "pretty";
  bool json = false;
  bool force = false;
  bool timings = false;

  std::string effective_format() const { return json ? "json" : format; }
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw std::invalid_argument("format '" + format + "' is not available for this command");
}

int cmd_matrix(const Globals& g, int n, const std::string& strategy) {
  const std::string format = g.effective_format();
  require_format(format, {"pretty", "json", "csv"});
  const DeltaMatrix M = build_matrix(n, BuildStrategy::parse(strategy));
  if (format == "json")
    std::cout << to_json(M) << '\n';
  else if (format == "csv")
    std::cout << to_csv(M);
  else
    std::cout << to_pretty(M);
  return 0;
}

int cmd_triangle(const Globals& g, int n_max) {
  const std::string format = g.effective_format();
  require_format(format, {"pretty", "json", "bfile"});
  const Triangle tri = poupard_triangle(n_max);
  if (format == "json") {
    std::cout << tri.to_json() << '\n';
  } else if (format == "bfile") {
    std::cout << tri.to_bfile();
  } else {
    for (const auto& row : tri.rows()) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? " " : "") << to_decimal(row[i]);
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_trees(const Globals& g, int n) {
  const std::string format = g.effective_format();
  require_format(format, {"pretty", "json"});
  const int limit = g.force ? n : kDefaultEnumerationLimit;
  if (n > limit) throw ResourceLimit("n=" + std::to_string(n) + " needs --force");
  if (format == "json") {
    std::cout << '[';
    bool first = true;
    enumerate_trees(n, [&](const Tree& t) {
      nlohmann::ordered_json item;
      item["tree"] = t.serialize();
      item["eoc"] = eoc(t);
      item["pom"] = pom(t);
      std::cout << (first ? "\n" : ",\n") << item.dump();
      first = false;
    });
    std::cout << "\n]\n";
  } else {
    enumerate_trees(n, [&](const Tree& t) {
      std::cout << "eoc=" << eoc(t) << " pom=" << pom(t) << "  " << t.serialize() << '\n';
    });
  }
  return 0;
}

int cmd_gf(int cap, const std::string& which) {
  const series::TriSeries s = which == "lambda" ? lambda_rhs(cap) : omega_rhs(cap);
  std::cout << s.dump();
  return 0;
}

int cmd_verify(const Globals& g, VerifyOptions options, const std::string& report_path) {
  options.force = g.force;
  const VerifyReport report = run_verify(options);
  const std::string format = g.effective_format();
  require_format(format, {"pretty", "json"});
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw std::runtime_error("cannot write " + report_path);
    out << report.to_json(g.timings) << '\n';
  }
  if (format == "json") {
    std::cerr << report.summary();
    std::cout << report.to_json(g.timings) << '\n';
  } else {
    std::cout << report.summary();
  }
  return report.all_passed() ? 0 : 1;
}

int cmd_export(int n_max, const std::string& strategy, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    const fs::path path = fs::path(dir) / name;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    std::cout << path.string() << '\n';
  };
  const auto seq = build_sequence(n_max, BuildStrategy::parse(strategy));
  for (const auto& M : seq) {
    write("m" + std::to_string(M.n()) + ".json", to_json(M) + "\n");
    write("m" + std::to_string(M.n()) + ".csv", to_csv(M));
  }
  const Triangle tri = poupard_triangle(n_max);
  write("triangle.json", tri.to_json() + "\n");
  write("b008301.txt", tri.to_bfile());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delta matrices, Poupard triangles and strictly ordered binary trees"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format: pretty, json, csv or bfile")
      ->check(CLI::IsMember({"pretty", "json", "csv", "bfile"}));
  app.add_flag("--json", g.json, "Shorthand for --format json");
  app.add_flag("--force", g.force, "Lift the enumeration size limits");
  app.add_flag("--timings", g.timings, "Include wall_ms in JSON reports");

  int n = 1;
  std::string strategy = "d1";
  auto* matrix = app.add_subcommand("matrix", "Print M_n");
  matrix->add_option("--n", n, "Matrix index")->required()->check(CLI::Range(1, 200));
  matrix->add_option("--strategy", strategy, "d1..d9")
      ->check(CLI::IsMember({"d1", "d2", "d3", "d4", "d5", "d6", "d7", "d8", "d9"}, CLI::ignore_case));

  int n_max = 4;
  auto* triangle = app.add_subcommand("triangle", "Print the Poupard triangle rows 0..n-max");
  triangle->add_option("--n-max", n_max, "Last row")->check(CLI::Range(0, 500));

  int tree_n = 2;
  auto* trees = app.add_subcommand("trees", "Print eoc and pom for every tree on 2n+1 nodes");
  trees->add_option("--n", tree_n, "Half the number of edges")->required()->check(CLI::Range(1, 15));

  int cap = 4;
  std::string which = "lambda";
  auto* gf = app.add_subcommand("gf", "Dump a generating function to total degree cap");
  gf->add_option("--cap", cap, "Total-degree cap")->check(CLI::Range(0, 60));
  gf->add_option("--which", which, "lambda or omega")->check(CLI::IsMember({"lambda", "omega"}));

  VerifyOptions vopt;
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  verify->add_option("--n-max", vopt.n_max, "Largest n")->check(CLI::Range(1, 60));
  verify->add_option("--checks", vopt.checks, "Suites to run, comma separated, or all")->delimiter(',');
  verify->add_option("--cap", vopt.cap, "Generating-function cap")->check(CLI::Range(0, 40));
  verify->add_option("--golden-dir", vopt.golden_dir, "Fixture directory");
  verify->add_option("--report", report_path, "Also write the JSON report here");

  int export_n_max = 5;
  std::string export_dir;
  std::string export_strategy = "d1";
  auto* exp = app.add_subcommand("export", "Write matrices, triangle and b-file");
  exp->add_option("--n-max", export_n_max, "Largest n")->check(CLI::Range(1, 200));
  exp->add_option("--dir", export_dir, "Output directory")->required();
  exp->add_option("--strategy", export_strategy, "d1..d9")
      ->check(CLI::IsMember({"d1", "d2", "d3", "d4", "d5", "d6", "d7", "d8", "d9"}, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*matrix) return cmd_matrix(g, n, strategy);
    if (*triangle) return cmd_triangle(g, n_max);
    if (*trees) return cmd_trees(g, tree_n);
    if (*gf) return cmd_gf(cap, which);
    if (*verify) return cmd_verify(g, vopt, report_path);
    if (*exp) return cmd_export(export_n_max, export_strategy, export_dir);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}
