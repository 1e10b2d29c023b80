#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "treecalc/verify.hpp"

using namespace treecalc;

namespace {

void expect_clean(const VerifyReport& r) {
  for (const auto& rec : r.records())
    CHECK_MESSAGE(rec.status != CheckStatus::fail, rec.name << ": " << rec.counterexample);
  CHECK(r.all_passed());
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("report bookkeeping") {
    Check a("b-check");
    a.n(2).expect(false, [] { return "first"; });
    a.expect(false, [] { return "second"; });
    const CheckRecord rec = a.finish();
    CHECK(rec.status == CheckStatus::fail);
    CHECK(rec.counterexample == "first");

    VerifyReport r;
    r.add(rec);
    Check b("a-check");
    b.skip("later");
    r.add(b.finish());
    r.sort();
    CHECK(r.records().front().name == "a-check");
    CHECK_FALSE(r.all_passed());
    CHECK(r.count(CheckStatus::skipped) == 1);
    const auto j = nlohmann::json::parse(r.to_json());
    CHECK(j.dump().find("wall_ms") == std::string::npos);
    CHECK(nlohmann::json::parse(r.to_json(true)).dump().find("wall_ms") != std::string::npos);
    CHECK(r.summary().find("0 passed, 1 failed, 1 skipped") != std::string::npos);
  }

  TEST_CASE("small suites pass") {
    VerifyOptions o;
    o.n_max = 4;
    o.cap = 6;
    o.closed_form_cap = 6;
    o.p_max = 3;
    o.closed_form_p_max = 3;
    o.reindex_size = 6;
    expect_clean(run_verify(o));
  }

  TEST_CASE("unknown suites are rejected") {
    VerifyOptions o;
    o.checks = {"golden", "nonsense"};
    CHECK_THROWS_AS(run_verify(o), std::invalid_argument);
  }

  TEST_CASE("caps are reported as skipped") {
    VerifyOptions o;
    o.n_max = 7;
    o.checks = {"bijection"};
    o.bijection_cap = 3;
    const VerifyReport r = run_verify(o);
    CHECK(r.count(CheckStatus::skipped) == 1);
    CHECK(r.count(CheckStatus::fail) == 0);
  }

  TEST_CASE("corrupted fixtures fail") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "treecalc_bad_golden";
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (const auto& e : fs::directory_iterator(TREECALC_DEFAULT_GOLDEN_DIR)) fs::copy(e.path(), dir / e.path().filename());
    std::ofstream(dir / "m2.json") << R"({"n":2,"rows":[[0,0,0,0],[0,0,1,0],[1,1,0,0],[0,2,0,0]]})";
    VerifyOptions o;
    o.n_max = 3;
    o.checks = {"golden"};
    o.golden_dir = dir.string();
    const VerifyReport r = run_verify(o);
    CHECK(r.count(CheckStatus::fail) == 1);
    fs::remove_all(dir);
  }
}
