#include "gdsl/detail/json_doc.hpp"

#include <cmath>
#include <cstdio>

namespace gdsl::detail {
namespace {

void line_column(std::string_view text, std::size_t byte, std::size_t& line, std::size_t& column) {
  line = 1;
  column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

std::string field_label(const std::string& path) { return path.empty() ? "/" : path; }

}  // namespace

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 0;
    std::size_t column = 0;
    line_column(text, e.byte == 0 ? 0 : e.byte - 1, line, column);
    throw ParseError("SYNTAX", "malformed document", {}, line, column);
  }
}

std::string child_path(const std::string& parent, std::string_view key) {
  return parent + "/" + std::string(key);
}

std::string child_path(const std::string& parent, std::size_t index) {
  return parent + "/" + std::to_string(index);
}

const Json& require_field(const Json& obj, std::string_view key, const std::string& path) {
  require_object(obj, path);
  auto it = obj.find(std::string(key));
  if (it == obj.end()) throw ParseError("MISSING_FIELD", "missing required field", child_path(path, key));
  return *it;
}

const Json& require_object(const Json& value, const std::string& path) {
  if (!value.is_object()) throw ParseError("WRONG_TYPE", "expected an object", field_label(path));
  return value;
}

const Json& require_array(const Json& value, const std::string& path) {
  if (!value.is_array()) throw ParseError("WRONG_TYPE", "expected an array", field_label(path));
  return value;
}

double require_number(const Json& value, const std::string& path) {
  if (!value.is_number()) throw ParseError("WRONG_TYPE", "expected a number", field_label(path));
  const double v = value.get<double>();
  if (!std::isfinite(v)) throw ParseError("WRONG_TYPE", "expected a finite number", field_label(path));
  return v;
}

std::int64_t require_integer(const Json& value, const std::string& path) {
  if (value.is_number_integer()) return value.get<std::int64_t>();
  if (value.is_number_float()) {
    const double v = value.get<double>();
    if (std::isfinite(v) && std::floor(v) == v) return static_cast<std::int64_t>(v);
  }
  throw ParseError("WRONG_TYPE", "expected an integer", field_label(path));
}

std::string require_string(const Json& value, const std::string& path) {
  if (!value.is_string()) throw ParseError("WRONG_TYPE", "expected a string", field_label(path));
  return value.get<std::string>();
}

bool require_bool(const Json& value, const std::string& path) {
  if (!value.is_boolean()) throw ParseError("WRONG_TYPE", "expected a boolean", field_label(path));
  return value.get<bool>();
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string out = buf;
  // "-0.000" -> "0.000"
  if (out.size() > 1 && out[0] == '-' && out.find_first_not_of("0.", 1) == std::string::npos) out.erase(0, 1);
  return out;
}

}  // namespace gdsl::detail
