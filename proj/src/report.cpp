#include "treecalc/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace treecalc {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

void VerifyReport::merge(const VerifyReport& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

bool VerifyReport::all_passed() const {
  return std::none_of(records_.begin(), records_.end(),
                      [](const CheckRecord& r) { return r.status == CheckStatus::fail; });
}

std::size_t VerifyReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(
      records_.begin(), records_.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

void VerifyReport::sort() {
  auto key = [](const CheckRecord& r) {
    return std::make_tuple(r.name, r.n.value_or(-1), r.p.value_or(-1), r.cap.value_or(-1));
  };
  std::stable_sort(records_.begin(), records_.end(),
                   [&](const CheckRecord& a, const CheckRecord& b) { return key(a) < key(b); });
}

std::string VerifyReport::to_json(bool include_timings) const {
  nlohmann::ordered_json out;
  out["passed"] = all_passed();
  out["counts"] = {{"pass", count(CheckStatus::pass)},
                   {"fail", count(CheckStatus::fail)},
                   {"skipped", count(CheckStatus::skipped)}};
  auto& list = out["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : records_) {
    nlohmann::ordered_json item;
    item["name"] = r.name;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    if (r.n) params["n"] = *r.n;
    if (r.p) params["p"] = *r.p;
    if (r.cap) params["cap"] = *r.cap;
    item["params"] = params;
    item["status"] = to_string(r.status);
    if (!r.counterexample.empty()) item["counterexample"] = r.counterexample;
    if (!r.note.empty()) item["note"] = r.note;
    if (include_timings) item["wall_ms"] = r.wall_ms;
    list.push_back(std::move(item));
  }
  return out.dump(2);
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  for (const auto& r : records_) {
    os << std::left << std::setw(8) << to_string(r.status) << r.name;
    if (r.n) os << " n=" << *r.n;
    if (r.p) os << " p=" << *r.p;
    if (r.cap) os << " cap=" << *r.cap;
    if (!r.note.empty()) os << "  [" << r.note << "]";
    os << '\n';
    if (!r.counterexample.empty()) os << "        counterexample: " << r.counterexample << '\n';
  }
  os << count(CheckStatus::pass) << " passed, " << count(CheckStatus::fail) << " failed, "
     << count(CheckStatus::skipped) << " skipped\n";
  return os.str();
}

Check::Check(std::string name) : start_(std::chrono::steady_clock::now()) {
  rec_.name = std::move(name);
}

void Check::fail(std::string counterexample) {
  if (rec_.status == CheckStatus::fail) return;
  rec_.status = CheckStatus::fail;
  rec_.counterexample = std::move(counterexample);
}

void Check::skip(std::string why) {
  rec_.status = CheckStatus::skipped;
  rec_.note = std::move(why);
}

CheckRecord Check::finish() {
  rec_.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  return rec_;
}

}  // namespace treecalc
