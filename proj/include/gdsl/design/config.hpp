#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gdsl::design {

class DesignSchema;

// A parameter value. The alternative must match the ParamSpec kind:
// boolean -> bool, integer -> int64, float -> double, select -> option label.
using Value = std::variant<bool, std::int64_t, double, std::string>;

std::string to_string(const Value& v);

// One assignment of the design space, keyed by dotted path.
struct DesignConfiguration {
  std::map<std::string, Value> assignments;

  bool contains(const std::string& path) const { return assignments.count(path) != 0; }
  const Value& at(const std::string& path) const;

  // Typed accessors; throw InvalidArgument when absent or of another kind.
  bool boolean(const std::string& path) const;
  std::int64_t integer(const std::string& path) const;
  double real(const std::string& path) const;
  const std::string& select(const std::string& path) const;

  friend bool operator==(const DesignConfiguration&, const DesignConfiguration&) = default;
};

enum class ViolationReason { missing, out_of_range, unknown_path, wrong_kind };

std::string_view to_string(ViolationReason r);

struct ConfigViolation {
  std::string path;
  ViolationReason reason;
  std::string message;

  friend bool operator==(const ConfigViolation&, const ConfigViolation&) = default;
};

// Empty iff every schema path is assigned a value of the right kind inside its
// domain and no unknown paths are present. Violations follow schema order,
// then unknown paths in lexicographic order.
std::vector<ConfigViolation> validate_config(const DesignConfiguration& cfg, const DesignSchema& schema);

// Paths whose values differ between two configurations (either side missing
// counts as a difference), lexicographically ordered.
std::vector<std::string> config_diff(const DesignConfiguration& a, const DesignConfiguration& b);

// Config document: {"schema_version": ..., "design": {path: value, ...}}.
// Whole-number JSON values for float parameters are read as doubles. Values
// for unknown paths are kept so that validate_config can report them.
// Throws ParseError.
DesignConfiguration read_config(std::string_view text, const DesignSchema& schema);
// Schema order first, then unknown paths.
std::string write_config(const DesignConfiguration& cfg, const DesignSchema& schema);

}  // namespace gdsl::design
