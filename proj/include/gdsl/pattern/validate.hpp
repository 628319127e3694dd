#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gdsl/pattern/pattern.hpp"

namespace gdsl::pattern {

// Violation codes, in the order the checks run.
namespace codes {
inline constexpr const char* kTooFewEdges = "PANEL_TOO_FEW_EDGES";
inline constexpr const char* kDuplicatePanelId = "DUPLICATE_PANEL_ID";
inline constexpr const char* kPlacementNotUnit = "PLACEMENT_NOT_UNIT";
inline constexpr const char* kEdgeDegenerate = "EDGE_DEGENERATE";
inline constexpr const char* kNotClosed = "PANEL_NOT_CLOSED";
inline constexpr const char* kSelfIntersect = "PANEL_SELF_INTERSECT";
inline constexpr const char* kStitchUnresolved = "STITCH_UNRESOLVED";
inline constexpr const char* kStitchSelf = "STITCH_SELF";
inline constexpr const char* kRuffleRange = "STITCH_RUFFLE_RANGE";
inline constexpr const char* kEdgeMultiStitch = "EDGE_MULTI_STITCH";
inline constexpr const char* kLengthMismatch = "STITCH_LENGTH_MISMATCH";
}  // namespace codes

// Relative tolerance on |len_a / len_b - ruffle| / ruffle.
inline constexpr double kStitchLengthTolerance = 0.05;

struct Violation {
  std::string code;
  std::string subject;  // panel id or "stitch[i]"
  std::string message;
  std::vector<std::pair<std::string, double>> measured;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidityReport {
  bool passed = true;
  std::vector<Violation> violations;

  bool has(const std::string& code) const;
  friend bool operator==(const ValidityReport&, const ValidityReport&) = default;
};

// Structural feasibility check. Never throws; every problem found is listed.
ValidityReport validate_pattern(const Pattern& p);

}  // namespace gdsl::pattern
