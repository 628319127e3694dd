#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gdsl/design/config.hpp"
#include "gdsl/design/schema.hpp"

namespace gdsl::design {

// A descriptive multiple-choice response for one parameter.
struct Answer {
  std::string param_path;
  std::string label;

  friend bool operator==(const Answer&, const Answer&) = default;
};

// Labels offered for a parameter: options for selects, yes/no for booleans,
// bucket labels for numeric kinds. Throws SchemaError when a numeric
// parameter has no buckets.
std::vector<std::string> choices_for(const ParamSpec& spec);

// Case-insensitive, whitespace-trimmed comparison used for answer labels.
bool same_label(std::string_view a, std::string_view b);

// Value denoted by a label, or nullopt when the label is not a choice.
std::optional<Value> value_for_label(const ParamSpec& spec, std::string_view label);

// Bucket whose value is closest to `v` (ties go to the lower bucket).
std::size_t nearest_bucket(const ParamSpec& spec, double v);
// Descriptive label of a value: the option, yes/no, or nearest bucket label.
std::string label_for_value(const ParamSpec& spec, const Value& v);

// Deterministic projector from descriptive answers to a configuration. Every
// schema path must be answered; later answers for a path override earlier
// ones. Throws ProjectionError (UNKNOWN_LABEL, UNKNOWN_PATH, MISSING_ANSWER)
// naming the path and the received label.
DesignConfiguration project_answers(const std::vector<Answer>& answers, const DesignSchema& schema);

}  // namespace gdsl::design
