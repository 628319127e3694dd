#include "gdsl/garment/body.hpp"

#include <cmath>

#include "gdsl/detail/json_doc.hpp"
#include "gdsl/error.hpp"
#include "gdsl/resources.hpp"

namespace gdsl::garment {
namespace {

struct Field {
  const char* name;
  double BodyMeasurements::*member;
};

constexpr Field kFields[] = {
    {"height", &BodyMeasurements::height},
    {"neck_circ", &BodyMeasurements::neck_circ},
    {"shoulder_width", &BodyMeasurements::shoulder_width},
    {"bust_circ", &BodyMeasurements::bust_circ},
    {"underbust_circ", &BodyMeasurements::underbust_circ},
    {"waist_circ", &BodyMeasurements::waist_circ},
    {"hip_circ", &BodyMeasurements::hip_circ},
    {"back_width", &BodyMeasurements::back_width},
    {"arm_length", &BodyMeasurements::arm_length},
    {"wrist_circ", &BodyMeasurements::wrist_circ},
    {"waist_to_hip", &BodyMeasurements::waist_to_hip},
    {"waist_to_knee", &BodyMeasurements::waist_to_knee},
    {"waist_to_floor", &BodyMeasurements::waist_to_floor},
    {"rise_depth", &BodyMeasurements::rise_depth},
};

}  // namespace

void validate_body(const BodyMeasurements& b) {
  for (const Field& f : kFields) {
    const double v = b.*f.member;
    if (!(std::isfinite(v) && v > 0.0))
      throw DraftError("INVALID_MEASUREMENTS", std::string(f.name) + " must be positive, got " + std::to_string(v));
  }
  if (b.bust_circ < b.underbust_circ)
    throw DraftError("INVALID_MEASUREMENTS", "bust_circ must not be smaller than underbust_circ");
  if (b.hip_circ < 0.8 * b.waist_circ)
    throw DraftError("INVALID_MEASUREMENTS", "hip_circ must be at least 0.8 * waist_circ");
  if (!(b.waist_to_knee < b.waist_to_floor))
    throw DraftError("INVALID_MEASUREMENTS", "waist_to_knee must be shorter than waist_to_floor");
}

BodyMeasurements read_body(std::string_view text) {
  const detail::Json doc = detail::parse_document(text);
  BodyMeasurements b;
  for (const Field& f : kFields)
    b.*f.member = detail::require_number(detail::require_field(doc, f.name, ""), std::string("/") + f.name);
  validate_body(b);
  return b;
}

std::string write_body(const BodyMeasurements& b) {
  detail::Json doc = detail::Json::object();
  for (const Field& f : kFields) doc[f.name] = b.*f.member;
  return doc.dump(2) + "\n";
}

const BodyMeasurements& standard_body() {
  static const BodyMeasurements body = read_body(resources::standard_json);
  return body;
}

}  // namespace gdsl::garment
