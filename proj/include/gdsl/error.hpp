#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gdsl {

// Base for every error the engine raises. `code()` is a stable machine-readable
// tag (e.g. "PANEL_SELF_INTERSECT", "WRONG_PARAM_COUNT") used by the CLI and
// the HTTP layer; `what()` is the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define GDSL_DEFINE_ERROR(Name, DefaultCode)                       \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& message)                      \
        : Error(DefaultCode, message) {}                           \
    Name(std::string code, const std::string& message)             \
        : Error(std::move(code), message) {}                       \
  };

GDSL_DEFINE_ERROR(InvalidArgument, "INVALID_ARGUMENT")
GDSL_DEFINE_ERROR(DegenerateGeometry, "DEGENERATE_GEOMETRY")
GDSL_DEFINE_ERROR(ValidationFailed, "VALIDATION_FAILED")
GDSL_DEFINE_ERROR(SchemaError, "SCHEMA_ERROR")
GDSL_DEFINE_ERROR(TokenDomainError, "TOKEN_DOMAIN")
GDSL_DEFINE_ERROR(ProjectionError, "PROJECTION_ERROR")
GDSL_DEFINE_ERROR(DraftError, "DRAFT_ERROR")
GDSL_DEFINE_ERROR(AssemblyError, "ASSEMBLY_ERROR")
GDSL_DEFINE_ERROR(AgentError, "AGENT_ERROR")
GDSL_DEFINE_ERROR(EditError, "EDIT_ERROR")
GDSL_DEFINE_ERROR(InputError, "INPUT_ERROR")

#undef GDSL_DEFINE_ERROR

// Document parse failure. `field` is a JSON-pointer-like location
// ("/stitches/0/side_b") or empty; `line`/`column` are 1-based and 0 when the
// failure is structural rather than syntactic.
class ParseError : public Error {
 public:
  ParseError(std::string code, const std::string& message, std::string field = {},
             std::size_t line = 0, std::size_t column = 0)
      : Error(std::move(code), Format(message, field, line, column)),
        field_(std::move(field)),
        line_(line),
        column_(column) {}

  explicit ParseError(const std::string& message) : ParseError("PARSE_ERROR", message) {}

  const std::string& field() const noexcept { return field_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string Format(const std::string& message, const std::string& field,
                            std::size_t line, std::size_t column) {
    std::string out = message;
    if (!field.empty()) out += " (field " + field + ")";
    if (line != 0) out += " at line " + std::to_string(line) + ", column " + std::to_string(column);
    return out;
  }

  std::string field_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace gdsl
