#pragma once

#include <string>
#include <string_view>

namespace gdsl::garment {

// Body measurements in cm.
struct BodyMeasurements {
  double height = 170.0;
  double neck_circ = 36.0;
  double shoulder_width = 38.0;
  double bust_circ = 90.0;
  double underbust_circ = 78.0;
  double waist_circ = 70.0;
  double hip_circ = 95.0;
  double back_width = 36.0;
  double arm_length = 55.0;
  double wrist_circ = 16.0;
  double waist_to_hip = 20.0;
  double waist_to_knee = 55.0;
  double waist_to_floor = 100.0;
  double rise_depth = 26.0;

  // Shoulder-to-waist length used by the bodice drafts.
  double waist_length() const { return 0.25 * height; }

  friend bool operator==(const BodyMeasurements&, const BodyMeasurements&) = default;
};

// Throws DraftError (INVALID_MEASUREMENTS) unless all values are positive and
// finite, bust >= underbust, hip >= 0.8 * waist and waist_to_knee < waist_to_floor.
void validate_body(const BodyMeasurements& b);

// Measurements document: a flat object with one number per field, all
// required. Throws ParseError, then DraftError from validate_body.
BodyMeasurements read_body(std::string_view text);
std::string write_body(const BodyMeasurements& b);

// The shipped standard body.
const BodyMeasurements& standard_body();

}  // namespace gdsl::garment
