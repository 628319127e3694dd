#include "gdsl/design/schema.hpp"

#include <cctype>
#include <cmath>

#include "gdsl/detail/json_doc.hpp"
#include "gdsl/error.hpp"
#include "gdsl/resources.hpp"

namespace gdsl::design {
namespace {

using detail::Json;

bool valid_path(std::string_view p) {
  if (p.empty() || p.front() == '.' || p.back() == '.' || p.find("..") != std::string_view::npos) return false;
  for (char c : p) {
    if (!(std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_' ||
          c == '.'))
      return false;
  }
  return p.find('.') != std::string_view::npos;
}

void check_spec(const ParamSpec& s) {
  if (!valid_path(s.path)) throw SchemaError("BAD_PATH", "parameter path '" + s.path + "' is not a dotted name");
  if (s.numeric()) {
    if (!(std::isfinite(s.min) && std::isfinite(s.max) && s.min < s.max))
      throw SchemaError("BAD_RANGE", s.path + ": range needs min < max");
    if (s.kind == ParamKind::integer && (std::floor(s.min) != s.min || std::floor(s.max) != s.max))
      throw SchemaError("BAD_RANGE", s.path + ": integer range bounds must be whole numbers");
    if (!s.options.empty()) throw SchemaError("BAD_OPTIONS", s.path + ": numeric parameters take no options");
    double prev = -INFINITY;
    for (const Bucket& b : s.descriptive_buckets) {
      if (b.label.empty()) throw SchemaError("BAD_BUCKET", s.path + ": empty bucket label");
      if (!(b.value >= s.min && b.value <= s.max))
        throw SchemaError("BAD_BUCKET", s.path + ": bucket '" + b.label + "' lies outside the range");
      if (s.kind == ParamKind::integer && std::floor(b.value) != b.value)
        throw SchemaError("BAD_BUCKET", s.path + ": bucket '" + b.label + "' is not a whole number");
      if (!(b.value > prev)) throw SchemaError("BAD_BUCKET", s.path + ": buckets must ascend strictly by value");
      prev = b.value;
    }
    for (std::size_t i = 0; i < s.descriptive_buckets.size(); ++i) {
      for (std::size_t j = i + 1; j < s.descriptive_buckets.size(); ++j) {
        if (s.descriptive_buckets[i].label == s.descriptive_buckets[j].label)
          throw SchemaError("BAD_BUCKET", s.path + ": duplicate bucket label '" + s.descriptive_buckets[i].label + "'");
      }
    }
  } else {
    if (!s.descriptive_buckets.empty())
      throw SchemaError("BAD_BUCKET", s.path + ": only numeric parameters carry buckets");
    if (s.kind == ParamKind::select) {
      if (s.options.size() < 2) throw SchemaError("BAD_OPTIONS", s.path + ": a select needs at least 2 options");
      for (std::size_t i = 0; i < s.options.size(); ++i) {
        if (s.options[i].empty()) throw SchemaError("BAD_OPTIONS", s.path + ": empty option label");
        for (std::size_t j = i + 1; j < s.options.size(); ++j) {
          if (s.options[i] == s.options[j]) throw SchemaError("BAD_OPTIONS", s.path + ": duplicate option '" + s.options[i] + "'");
        }
      }
    } else if (!s.options.empty()) {
      throw SchemaError("BAD_OPTIONS", s.path + ": booleans take no options");
    }
  }
  if (!s.admits(s.default_value)) throw SchemaError("BAD_DEFAULT", s.path + ": default value is outside the domain");
}

ParamKind parse_kind(const std::string& text, const std::string& field) {
  if (text == "boolean") return ParamKind::boolean;
  if (text == "integer") return ParamKind::integer;
  if (text == "float") return ParamKind::real;
  if (text == "select") return ParamKind::select;
  throw ParseError("WRONG_TYPE", "unknown parameter kind '" + text + "'", field);
}

ParamRole parse_role(const std::string& text, const std::string& field) {
  if (text == "topological") return ParamRole::topological;
  if (text == "geometrical") return ParamRole::geometrical;
  throw ParseError("WRONG_TYPE", "unknown parameter role '" + text + "'", field);
}

Value parse_default(const Json& j, ParamKind kind, const std::string& field) {
  switch (kind) {
    case ParamKind::boolean: return detail::require_bool(j, field);
    case ParamKind::integer: return detail::require_integer(j, field);
    case ParamKind::real: return detail::require_number(j, field);
    case ParamKind::select: return detail::require_string(j, field);
  }
  return false;
}

Json value_json(const Value& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

}  // namespace

std::string_view to_string(ParamKind k) {
  switch (k) {
    case ParamKind::boolean: return "boolean";
    case ParamKind::integer: return "integer";
    case ParamKind::real: return "float";
    case ParamKind::select: return "select";
  }
  return "boolean";
}

std::string_view to_string(ParamRole r) { return r == ParamRole::topological ? "topological" : "geometrical"; }

std::optional<std::size_t> ParamSpec::option_index(std::string_view label) const {
  for (std::size_t i = 0; i < options.size(); ++i) {
    if (options[i] == label) return i;
  }
  return std::nullopt;
}

bool ParamSpec::admits(const Value& v) const {
  switch (kind) {
    case ParamKind::boolean: return std::holds_alternative<bool>(v);
    case ParamKind::integer: {
      const auto* i = std::get_if<std::int64_t>(&v);
      return i && static_cast<double>(*i) >= min && static_cast<double>(*i) <= max;
    }
    case ParamKind::real: {
      const auto* d = std::get_if<double>(&v);
      return d && std::isfinite(*d) && *d >= min && *d <= max;
    }
    case ParamKind::select: {
      const auto* s = std::get_if<std::string>(&v);
      return s && option_index(*s).has_value();
    }
  }
  return false;
}

DesignSchema::DesignSchema(std::string version, std::vector<ParamSpec> params)
    : version_(std::move(version)), params_(std::move(params)) {
  if (version_.empty()) throw SchemaError("BAD_VERSION", "schema_version must not be empty");
  for (std::size_t i = 0; i < params_.size(); ++i) {
    check_spec(params_[i]);
    if (!index_.emplace(params_[i].path, i).second)
      throw SchemaError("DUPLICATE_PATH", "parameter path '" + params_[i].path + "' appears more than once");
  }
  if (params_.size() != kSchemaParamCount) {
    throw SchemaError("WRONG_PARAM_COUNT", "schema defines " + std::to_string(params_.size()) + " parameters, expected " +
                                               std::to_string(kSchemaParamCount));
  }
}

const ParamSpec* DesignSchema::find(std::string_view path) const {
  auto it = index_.find(std::string(path));
  return it == index_.end() ? nullptr : &params_[it->second];
}

std::optional<std::size_t> DesignSchema::index_of(std::string_view path) const {
  auto it = index_.find(std::string(path));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const ParamSpec& DesignSchema::at(std::string_view path) const {
  if (const ParamSpec* s = find(path)) return *s;
  throw InvalidArgument("unknown parameter path '" + std::string(path) + "'");
}

DesignConfiguration DesignSchema::defaults() const {
  DesignConfiguration cfg;
  for (const ParamSpec& s : params_) cfg.assignments[s.path] = s.default_value;
  return cfg;
}

DesignSchema load_schema(std::string_view document) {
  const Json doc = detail::parse_document(document);
  const std::string version = detail::require_string(detail::require_field(doc, "schema_version", ""), "/schema_version");
  const Json& params = detail::require_array(detail::require_field(doc, "params", ""), "/params");
  std::vector<ParamSpec> specs;
  specs.reserve(params.size());
  for (std::size_t i = 0; i < params.size(); ++i) {
    const std::string at = detail::child_path("/params", i);
    const Json& j = detail::require_object(params[i], at);
    ParamSpec s;
    s.path = detail::require_string(detail::require_field(j, "path", at), at + "/path");
    s.kind = parse_kind(detail::require_string(detail::require_field(j, "kind", at), at + "/kind"), at + "/kind");
    s.role = parse_role(detail::require_string(detail::require_field(j, "role", at), at + "/role"), at + "/role");
    if (s.numeric()) {
      const Json& range = detail::require_array(detail::require_field(j, "range", at), at + "/range");
      if (range.size() != 2) throw SchemaError("BAD_RANGE", s.path + ": range must be [min, max]");
      s.min = detail::require_number(range[0], at + "/range/0");
      s.max = detail::require_number(range[1], at + "/range/1");
      if (auto it = j.find("descriptive_buckets"); it != j.end()) {
        const Json& buckets = detail::require_array(*it, at + "/descriptive_buckets");
        for (std::size_t k = 0; k < buckets.size(); ++k) {
          const std::string bat = detail::child_path(at + "/descriptive_buckets", k);
          s.descriptive_buckets.push_back(
              {detail::require_string(detail::require_field(buckets[k], "label", bat), bat + "/label"),
               detail::require_number(detail::require_field(buckets[k], "value", bat), bat + "/value")});
        }
      }
    }
    if (auto it = j.find("options"); it != j.end()) {
      const Json& options = detail::require_array(*it, at + "/options");
      for (std::size_t k = 0; k < options.size(); ++k)
        s.options.push_back(detail::require_string(options[k], detail::child_path(at + "/options", k)));
    } else if (s.kind == ParamKind::select) {
      throw SchemaError("BAD_OPTIONS", s.path + ": a select needs an options list");
    }
    s.default_value = parse_default(detail::require_field(j, "default", at), s.kind, at + "/default");
    specs.push_back(std::move(s));
  }
  return DesignSchema(version, std::move(specs));
}

std::string write_schema(const DesignSchema& schema) {
  Json doc;
  doc["schema_version"] = schema.version();
  Json params = Json::array();
  for (const ParamSpec& s : schema.params()) {
    Json j;
    j["path"] = s.path;
    j["kind"] = std::string(to_string(s.kind));
    if (s.numeric()) {
      if (s.kind == ParamKind::integer) {
        j["range"] = Json::array({static_cast<std::int64_t>(s.min), static_cast<std::int64_t>(s.max)});
      } else {
        j["range"] = Json::array({s.min, s.max});
      }
    }
    if (s.kind == ParamKind::select) j["options"] = s.options;
    j["role"] = std::string(to_string(s.role));
    j["default"] = value_json(s.default_value);
    if (!s.descriptive_buckets.empty()) {
      Json buckets = Json::array();
      for (const Bucket& b : s.descriptive_buckets) {
        Json jb;
        jb["label"] = b.label;
        if (s.kind == ParamKind::integer) {
          jb["value"] = static_cast<std::int64_t>(b.value);
        } else {
          jb["value"] = b.value;
        }
        buckets.push_back(std::move(jb));
      }
      j["descriptive_buckets"] = std::move(buckets);
    }
    params.push_back(std::move(j));
  }
  doc["params"] = std::move(params);
  return doc.dump(2) + "\n";
}

const DesignSchema& default_schema() {
  static const DesignSchema schema = load_schema(resources::default_schema_json);
  return schema;
}

}  // namespace gdsl::design
