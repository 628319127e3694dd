#pragma once

// Helpers shared by the document readers: typed field access that reports
// the JSON-pointer location of a bad or missing field.

#include <cstdint>
#include <string>
#include <string_view>

#include "gdsl/error.hpp"
#include "json.hpp"

namespace gdsl::detail {

using Json = nlohmann::ordered_json;

// Parses text, mapping syntax errors to ParseError{"SYNTAX"} with line/column.
Json parse_document(std::string_view text);

std::string child_path(const std::string& parent, std::string_view key);
std::string child_path(const std::string& parent, std::size_t index);

const Json& require_field(const Json& obj, std::string_view key, const std::string& path);
const Json& require_object(const Json& value, const std::string& path);
const Json& require_array(const Json& value, const std::string& path);
double require_number(const Json& value, const std::string& path);
std::int64_t require_integer(const Json& value, const std::string& path);
std::string require_string(const Json& value, const std::string& path);
bool require_bool(const Json& value, const std::string& path);

// Fixed-point rendering with `decimals` digits and no negative zero.
std::string format_fixed(double value, int decimals);

}  // namespace gdsl::detail
