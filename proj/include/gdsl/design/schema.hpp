#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gdsl/design/config.hpp"

namespace gdsl::design {

enum class ParamKind { boolean, integer, real, select };
enum class ParamRole { topological, geometrical };

std::string_view to_string(ParamKind k);  // "boolean" | "integer" | "float" | "select"
std::string_view to_string(ParamRole r);

struct Bucket {
  std::string label;
  double value = 0.0;

  friend bool operator==(const Bucket&, const Bucket&) = default;
};

struct ParamSpec {
  std::string path;
  ParamKind kind = ParamKind::boolean;
  double min = 0.0;  // numeric kinds only
  double max = 0.0;
  std::vector<std::string> options;  // select only
  ParamRole role = ParamRole::geometrical;
  std::vector<Bucket> descriptive_buckets;  // numeric kinds, ascending by value
  Value default_value;

  bool numeric() const { return kind == ParamKind::integer || kind == ParamKind::real; }
  // Position of `label` in options, if any.
  std::optional<std::size_t> option_index(std::string_view label) const;
  // True when `v` has the right alternative and lies in the domain.
  bool admits(const Value& v) const;

  friend bool operator==(const ParamSpec&, const ParamSpec&) = default;
};

inline constexpr std::size_t kSchemaParamCount = 122;

class DesignSchema {
 public:
  // Checks every invariant; throws SchemaError with codes WRONG_PARAM_COUNT,
  // DUPLICATE_PATH, BAD_PATH, BAD_RANGE, BAD_OPTIONS, BAD_BUCKET, BAD_DEFAULT.
  DesignSchema(std::string version, std::vector<ParamSpec> params);

  const std::string& version() const { return version_; }
  const std::vector<ParamSpec>& params() const { return params_; }
  std::size_t size() const { return params_.size(); }

  const ParamSpec* find(std::string_view path) const;
  std::optional<std::size_t> index_of(std::string_view path) const;
  const ParamSpec& at(std::string_view path) const;  // throws InvalidArgument

  DesignConfiguration defaults() const;

 private:
  std::string version_;
  std::vector<ParamSpec> params_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Parses a schema document. Structural problems raise ParseError; semantic
// ones raise SchemaError naming the offending path.
DesignSchema load_schema(std::string_view document);
std::string write_schema(const DesignSchema& schema);

// The schema shipped with the engine (parsed once, immutable).
const DesignSchema& default_schema();

}  // namespace gdsl::design
