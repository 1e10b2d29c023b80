#pragma once

#include <string>

#include <json.hpp>

#include "treecalc/grid.hpp"

namespace treecalc::detail {

// Parses JSON whose values are integers, arrays and objects only. Every
// integer is kept as its decimal text, so values of any size stay exact.
nlohmann::json parse_integer_json(const std::string& text);

BigInt integer_value(const nlohmann::json& v);
int small_integer_value(const nlohmann::json& v);

}  // namespace treecalc::detail
