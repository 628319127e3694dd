#include "gdsl/design/config.hpp"

#include <cmath>
#include <set>

#include "gdsl/design/schema.hpp"
#include "gdsl/detail/json_doc.hpp"
#include "gdsl/error.hpp"

namespace gdsl::design {
namespace {

using detail::Json;

template <typename T>
const T& typed(const DesignConfiguration& cfg, const std::string& path, const char* kind) {
  const Value& v = cfg.at(path);
  if (const T* p = std::get_if<T>(&v)) return *p;
  throw InvalidArgument("parameter " + path + " is not a " + kind);
}

std::string_view kind_of(const Value& v) {
  switch (v.index()) {
    case 0: return "boolean";
    case 1: return "integer";
    case 2: return "float";
    default: return "select";
  }
}

Json to_json(const Value& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

Value from_json(const Json& j, const ParamSpec* spec, const std::string& field) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) {
    if (spec && spec->kind == ParamKind::real) return j.get<double>();
    return j.get<std::int64_t>();
  }
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (spec && spec->kind == ParamKind::integer && std::floor(v) == v) return static_cast<std::int64_t>(v);
    return v;
  }
  throw ParseError("WRONG_TYPE", "expected a boolean, number or string", field);
}

}  // namespace

std::string to_string(const Value& v) {
  switch (v.index()) {
    case 0: return std::get<bool>(v) ? "true" : "false";
    case 1: return std::to_string(std::get<std::int64_t>(v));
    case 2: return Json(std::get<double>(v)).dump();
    default: return std::get<std::string>(v);
  }
}

std::string_view to_string(ViolationReason r) {
  switch (r) {
    case ViolationReason::missing: return "missing";
    case ViolationReason::out_of_range: return "out-of-range";
    case ViolationReason::unknown_path: return "unknown-path";
    case ViolationReason::wrong_kind: return "wrong-kind";
  }
  return "missing";
}

const Value& DesignConfiguration::at(const std::string& path) const {
  auto it = assignments.find(path);
  if (it == assignments.end()) throw InvalidArgument("parameter " + path + " is not assigned");
  return it->second;
}

bool DesignConfiguration::boolean(const std::string& path) const { return typed<bool>(*this, path, "boolean"); }
std::int64_t DesignConfiguration::integer(const std::string& path) const {
  return typed<std::int64_t>(*this, path, "integer");
}
double DesignConfiguration::real(const std::string& path) const { return typed<double>(*this, path, "float"); }
const std::string& DesignConfiguration::select(const std::string& path) const {
  return typed<std::string>(*this, path, "select");
}

std::vector<ConfigViolation> validate_config(const DesignConfiguration& cfg, const DesignSchema& schema) {
  std::vector<ConfigViolation> out;
  for (const ParamSpec& spec : schema.params()) {
    auto it = cfg.assignments.find(spec.path);
    if (it == cfg.assignments.end()) {
      out.push_back({spec.path, ViolationReason::missing, "no value assigned"});
      continue;
    }
    const Value& v = it->second;
    const bool kind_ok = (spec.kind == ParamKind::boolean && v.index() == 0) ||
                         (spec.kind == ParamKind::integer && v.index() == 1) ||
                         (spec.kind == ParamKind::real && v.index() == 2) ||
                         (spec.kind == ParamKind::select && v.index() == 3);
    if (!kind_ok) {
      out.push_back({spec.path, ViolationReason::wrong_kind,
                     "expected " + std::string(to_string(spec.kind)) + ", got " + std::string(kind_of(v))});
      continue;
    }
    if (!spec.admits(v)) {
      std::string domain;
      if (spec.kind == ParamKind::select) {
        domain = "one of the schema options";
      } else {
        domain = "[" + detail::format_fixed(spec.min, 4) + ", " + detail::format_fixed(spec.max, 4) + "]";
      }
      out.push_back({spec.path, ViolationReason::out_of_range, "value " + to_string(v) + " is outside " + domain});
    }
  }
  for (const auto& [path, value] : cfg.assignments) {
    if (!schema.find(path)) out.push_back({path, ViolationReason::unknown_path, "path is not in the schema"});
  }
  return out;
}

std::vector<std::string> config_diff(const DesignConfiguration& a, const DesignConfiguration& b) {
  std::set<std::string> paths;
  for (const auto& [k, v] : a.assignments) paths.insert(k);
  for (const auto& [k, v] : b.assignments) paths.insert(k);
  std::vector<std::string> out;
  for (const std::string& p : paths) {
    auto ia = a.assignments.find(p);
    auto ib = b.assignments.find(p);
    if (ia == a.assignments.end() || ib == b.assignments.end() || ia->second != ib->second) out.push_back(p);
  }
  return out;
}

DesignConfiguration read_config(std::string_view text, const DesignSchema& schema) {
  const Json doc = detail::parse_document(text);
  const Json& design = detail::require_object(detail::require_field(doc, "design", ""), "/design");
  if (auto it = doc.find("schema_version"); it != doc.end()) detail::require_string(*it, "/schema_version");
  DesignConfiguration cfg;
  for (const auto& [key, value] : design.items()) {
    cfg.assignments[key] = from_json(value, schema.find(key), detail::child_path("/design", key));
  }
  return cfg;
}

std::string write_config(const DesignConfiguration& cfg, const DesignSchema& schema) {
  Json doc;
  doc["schema_version"] = schema.version();
  Json design = Json::object();
  for (const ParamSpec& spec : schema.params()) {
    if (auto it = cfg.assignments.find(spec.path); it != cfg.assignments.end()) design[spec.path] = to_json(it->second);
  }
  for (const auto& [path, value] : cfg.assignments) {
    if (!schema.find(path)) design[path] = to_json(value);
  }
  doc["design"] = std::move(design);
  return doc.dump(2) + "\n";
}

}  // namespace gdsl::design
