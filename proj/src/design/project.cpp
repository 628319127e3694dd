#include "gdsl/design/project.hpp"

#include <cctype>
#include <cmath>
#include <map>

#include "gdsl/error.hpp"

namespace gdsl::design {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

bool same_label(std::string_view a, std::string_view b) {
  a = trim(a);
  b = trim(b);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i]))) return false;
  }
  return true;
}

std::vector<std::string> choices_for(const ParamSpec& spec) {
  switch (spec.kind) {
    case ParamKind::boolean: return {"yes", "no"};
    case ParamKind::select: return spec.options;
    case ParamKind::integer:
    case ParamKind::real: {
      if (spec.descriptive_buckets.size() < 2)
        throw SchemaError("NO_CHOICES", spec.path + " has neither options nor descriptive buckets");
      std::vector<std::string> out;
      for (const Bucket& b : spec.descriptive_buckets) out.push_back(b.label);
      return out;
    }
  }
  return {};
}

std::optional<Value> value_for_label(const ParamSpec& spec, std::string_view label) {
  switch (spec.kind) {
    case ParamKind::boolean:
      if (same_label(label, "yes")) return Value{true};
      if (same_label(label, "no")) return Value{false};
      return std::nullopt;
    case ParamKind::select:
      for (const std::string& o : spec.options) {
        if (same_label(label, o)) return Value{o};
      }
      return std::nullopt;
    case ParamKind::integer:
    case ParamKind::real:
      for (const Bucket& b : spec.descriptive_buckets) {
        if (same_label(label, b.label)) {
          if (spec.kind == ParamKind::integer) return Value{static_cast<std::int64_t>(b.value)};
          return Value{b.value};
        }
      }
      return std::nullopt;
  }
  return std::nullopt;
}

std::size_t nearest_bucket(const ParamSpec& spec, double v) {
  if (spec.descriptive_buckets.empty()) throw SchemaError("NO_CHOICES", spec.path + " has no descriptive buckets");
  std::size_t best = 0;
  for (std::size_t i = 1; i < spec.descriptive_buckets.size(); ++i) {
    if (std::abs(spec.descriptive_buckets[i].value - v) < std::abs(spec.descriptive_buckets[best].value - v)) best = i;
  }
  return best;
}

std::string label_for_value(const ParamSpec& spec, const Value& v) {
  switch (spec.kind) {
    case ParamKind::boolean: return std::get<bool>(v) ? "yes" : "no";
    case ParamKind::select: return std::get<std::string>(v);
    case ParamKind::integer:
      return spec.descriptive_buckets[nearest_bucket(spec, static_cast<double>(std::get<std::int64_t>(v)))].label;
    case ParamKind::real: return spec.descriptive_buckets[nearest_bucket(spec, std::get<double>(v))].label;
  }
  return {};
}

DesignConfiguration project_answers(const std::vector<Answer>& answers, const DesignSchema& schema) {
  std::map<std::string, const Answer*> latest;
  for (const Answer& a : answers) {
    if (!schema.find(a.param_path))
      throw ProjectionError("UNKNOWN_PATH", "answer for unknown parameter '" + a.param_path + "' (label '" + a.label + "')");
    latest[a.param_path] = &a;
  }
  DesignConfiguration cfg;
  for (const ParamSpec& spec : schema.params()) {
    auto it = latest.find(spec.path);
    if (it == latest.end()) throw ProjectionError("MISSING_ANSWER", "no answer for " + spec.path);
    auto value = value_for_label(spec, it->second->label);
    if (!value) {
      throw ProjectionError("UNKNOWN_LABEL",
                            "label '" + it->second->label + "' is not a choice for " + spec.path);
    }
    cfg.assignments[spec.path] = std::move(*value);
  }
  return cfg;
}

}  // namespace gdsl::design
