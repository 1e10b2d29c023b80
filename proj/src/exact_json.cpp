#include "exact_json.hpp"

#include <regex>
#include <stdexcept>
#include <vector>

namespace treecalc::detail {

namespace {

using json = nlohmann::json;

class IntegerSax : public nlohmann::json_sax<json> {
 public:
  json result;

  bool null() override { return reject("null"); }
  bool boolean(bool) override { return reject("boolean"); }
  bool number_integer(number_integer_t v) override { return put(std::to_string(v)); }
  bool number_unsigned(number_unsigned_t v) override { return put(std::to_string(v)); }
  bool number_float(number_float_t, const string_t& s) override {
    static const std::regex integer_text("-?(0|[1-9][0-9]*)");
    if (!std::regex_match(s, integer_text)) return reject("non-integer number " + s);
    return put(s);
  }
  bool string(string_t&) override { return reject("string"); }
  bool binary(binary_t&) override { return reject("binary"); }

  bool start_object(std::size_t) override { return open(json::object()); }
  bool key(string_t& k) override {
    key_ = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override { return open(json::array()); }
  bool end_array() override { return close(); }

  bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& e) override {
    throw std::invalid_argument("malformed JSON at byte " + std::to_string(pos) + ": " + e.what());
  }

 private:
  bool reject(const std::string& what) {
    throw std::invalid_argument("unexpected JSON value: " + what);
  }

  json* insert(json v) {
    if (stack_.empty()) {
      result = std::move(v);
      return &result;
    }
    json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(v));
      return &top.back();
    }
    top[key_] = std::move(v);
    return &top[key_];
  }

  bool put(std::string text) {
    insert(json(std::move(text)));
    return true;
  }
  bool open(json v) {
    stack_.push_back(insert(std::move(v)));
    return true;
  }
  bool close() {
    stack_.pop_back();
    return true;
  }

  std::vector<json*> stack_;
  std::string key_;
};

}  // namespace

json parse_integer_json(const std::string& text) {
  IntegerSax sax;
  json::sax_parse(text, &sax);
  return std::move(sax.result);
}

BigInt integer_value(const json& v) {
  if (!v.is_string()) throw std::invalid_argument("expected an integer");
  return BigInt(v.get<std::string>());
}

int small_integer_value(const json& v) {
  BigInt b = integer_value(v);
  if (!b.fits_sint_p()) throw std::invalid_argument("integer out of range");
  return static_cast<int>(b.get_si());
}

}  // namespace treecalc::detail
