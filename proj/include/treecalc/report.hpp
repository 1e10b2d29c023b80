#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace treecalc {

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus s);

// One verified statement over one parameter point.
struct CheckRecord {
  std::string name;
  std::optional<int> n;
  std::optional<int> p;
  std::optional<int> cap;
  CheckStatus status = CheckStatus::pass;
  std::string counterexample;  // first failure, empty when passing
  std::string note;
  double wall_ms = 0.0;
};

class VerifyReport {
 public:
  void add(CheckRecord record) { records_.push_back(std::move(record)); }
  void merge(const VerifyReport& other);

  const std::vector<CheckRecord>& records() const { return records_; }
  bool all_passed() const;
  std::size_t count(CheckStatus s) const;

  // Records ordered by check name, then n, p, cap.
  void sort();

  // wall_ms is emitted only when include_timings is set.
  std::string to_json(bool include_timings = false) const;
  std::string summary() const;

 private:
  std::vector<CheckRecord> records_;
};

// Accumulates one CheckRecord; only the first counterexample is kept.
class Check {
 public:
  explicit Check(std::string name);

  Check& n(int v) { rec_.n = v; return *this; }
  Check& p(int v) { rec_.p = v; return *this; }
  Check& cap(int v) { rec_.cap = v; return *this; }
  Check& note(std::string text) { rec_.note = std::move(text); return *this; }

  template <class Describe>
  bool expect(bool ok, Describe&& describe) {
    if (!ok && rec_.status != CheckStatus::fail) {
      rec_.status = CheckStatus::fail;
      rec_.counterexample = describe();
    }
    return ok;
  }

  void fail(std::string counterexample);
  void skip(std::string why);
  bool passed() const { return rec_.status == CheckStatus::pass; }

  CheckRecord finish();

 private:
  CheckRecord rec_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace treecalc
