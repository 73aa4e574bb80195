#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>

#include <json.hpp>

#include "evidentia/error.hpp"

namespace evidentia::kb::detail {

// A parsed JSON document plus the source position of every value, keyed by
// JSON pointer ("" for the root, "/rules/2/bpa", ...).
struct LocatedJson {
  nlohmann::json value;
  std::unordered_map<std::string, TextPosition> positions;

  TextPosition at(const std::string& pointer) const;
};

// Strict parse. Duplicate object keys and trailing content are SyntaxErrors.
LocatedJson parse_located(std::string_view text);

}  // namespace evidentia::kb::detail
