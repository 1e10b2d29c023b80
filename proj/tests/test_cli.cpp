#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "treecalc/delta.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, bool keep_stderr = false) {
  const std::string cmd = std::string("\"") + TREECALC_CLI + "\" " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string last_line(const std::string& text) {
  std::string t = text;
  while (!t.empty() && t.back() == '\n') t.pop_back();
  return t.substr(t.rfind('\n') + 1);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("matrix output") {
    const Run csv = run("matrix --n 2 --strategy d1 --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out == "0,0,0,0\n0,0,1,0\n1,1,0,0\n0,1,0,0\n");
    const Run json = run("matrix --n 1 --format json");
    CHECK(json.code == 0);
    CHECK(json.out == "{\"n\":1,\"rows\":[[0,0],[1,0]]}\n");
    CHECK(run("--json matrix --n 1").out == json.out);
    const Run pretty = run("matrix --n 4");
    CHECK(pretty.out.substr(0, 22) == " 0  0  0  0  0  0  0 0");
  }

  TEST_CASE("usage errors") {
    CHECK(run("matrix --n 0").code == 2);
    CHECK(run("matrix").code == 2);
    CHECK(run("matrix --n 3 --strategy d12").code == 2);
    CHECK(run("matrix --n 3 --format bfile").code == 2);
    CHECK(run("gf --which sigma").code == 2);
    CHECK(run("verify --checks golden,nonsense").code == 2);
    CHECK(run("trees --n 8").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("--help").code == 0);
  }

  TEST_CASE("triangle") {
    const Run r = run("triangle --n-max 3");
    CHECK(r.code == 0);
    CHECK(r.out == "1\n0 1 0\n0 1 2 1 0\n0 4 8 10 8 4 0\n");
    CHECK(run("triangle --n-max 1 --format bfile").out == "0 1\n1 0\n2 1\n3 0\n");
    CHECK(run("triangle --n-max 1 --json").out == "{\"rows\":[[1],[0,1,0]]}\n");
  }

  TEST_CASE("trees") {
    const Run r = run("trees --n 2");
    CHECK(r.code == 0);
    int lines = 0;
    for (char ch : r.out) lines += ch == '\n';
    CHECK(lines == 4);
    const auto j = nlohmann::json::parse(run("trees --n 3 --json").out);
    CHECK(j.size() == 34);
    CHECK(j[0].contains("eoc"));
  }

  TEST_CASE("generating function dumps") {
    CHECK(run("gf --cap 0 --which lambda").out == "0 0 0 1/1 0/1\n");
    const Run omega = run("gf --cap 0 --which omega");
    CHECK(omega.code == 0);
    CHECK(omega.out.empty());
    CHECK(run("gf --cap 6").out == run("gf --cap 6 --which lambda").out);
  }

  TEST_CASE("verify") {
    const Run golden = run("verify --n-max 5 --checks golden");
    CHECK(golden.code == 0);
    CHECK(golden.out.find("0 failed") != std::string::npos);
    const Run enumeration = run("verify --n-max 4 --checks enumeration");
    CHECK(enumeration.code == 0);
    CHECK(enumeration.out.find("1,4,34,496") != std::string::npos);
    const Run capped = run("verify --n-max 7 --checks bijection");
    CHECK(capped.code == 0);
    CHECK(capped.out.find("skipped") != std::string::npos);
  }

  TEST_CASE("verify json is deterministic") {
    const Run a = run("verify --n-max 3 --checks equivalence,symmetry,marginals --json");
    const Run b = run("verify --n-max 3 --checks equivalence,symmetry,marginals --json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j.dump().find("wall_ms") == std::string::npos);
    const auto t = nlohmann::json::parse(run("verify --n-max 2 --checks symmetry --json --timings").out);
    CHECK(t.dump().find("wall_ms") != std::string::npos);
  }

  TEST_CASE("corrupted golden directory") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "treecalc_cli_bad_golden";
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (const auto& e : fs::directory_iterator(TREECALC_DEFAULT_GOLDEN_DIR)) fs::copy(e.path(), dir / e.path().filename());
    std::ofstream(dir / "m1.json") << "{\"n\":1,\"rows\":[[0,1],[1,0]]}\n";
    const Run r = run("verify --n-max 2 --checks all --golden-dir \"" + dir.string() + "\"");
    CHECK(r.code == 1);
    CHECK(r.out.find("fail") != std::string::npos);
    CHECK(r.out.find("golden-matrix") != std::string::npos);
    fs::remove_all(dir);
  }

  TEST_CASE("export round trip") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "treecalc_cli_export";
    fs::remove_all(dir);
    const Run r = run("export --n-max 4 --dir \"" + dir.string() + "\" --strategy d7");
    CHECK(r.code == 0);
    for (const char* f : {"m1.json", "m4.csv", "triangle.json", "b008301.txt"}) CHECK(fs::exists(dir / f));
    std::ifstream in(dir / "m3.json");
    const std::string text((std::istreambuf_iterator<char>(in)), {});
    const auto M = treecalc::matrix_from_json(text);
    CHECK(M.total() == 34);
    CHECK(last_line(run("matrix --n 3 --json").out) + "\n" == text);
    fs::remove_all(dir);
  }
}
