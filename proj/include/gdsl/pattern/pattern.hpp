#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gdsl/geometry/edge.hpp"

namespace gdsl::pattern {

using geometry::Edge;

// 3D placement of a flat panel around the body: unit quaternion (w, x, y, z)
// and translation in cm.
struct PanelPlacement {
  std::array<double, 4> rotation{1.0, 0.0, 0.0, 0.0};
  std::array<double, 3> translation{0.0, 0.0, 0.0};

  // Rotation of `degrees` about the axis (ax, ay, az), which need not be unit.
  static PanelPlacement from_axis_angle(double ax, double ay, double az, double degrees,
                                        std::array<double, 3> translation);

  friend bool operator==(const PanelPlacement&, const PanelPlacement&) = default;
};

inline constexpr double kQuaternionTolerance = 1e-6;
double quaternion_norm(const PanelPlacement& placement);

struct Panel {
  std::string id;
  std::vector<Edge> edges;  // closed loop, edge i ends where edge i+1 starts
  PanelPlacement placement;

  friend bool operator==(const Panel&, const Panel&) = default;
};

struct EdgeRef {
  std::string panel;
  std::size_t edge = 0;

  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

inline constexpr double kMinRuffle = 0.25;
inline constexpr double kMaxRuffle = 4.0;

// side_a is sewn to side_b; ruffle_factor is the intended length ratio a / b.
struct Stitch {
  EdgeRef side_a;
  EdgeRef side_b;
  double ruffle_factor = 1.0;

  friend bool operator==(const Stitch&, const Stitch&) = default;
};

struct Pattern {
  std::vector<Panel> panels;
  std::vector<Stitch> stitches;
  std::optional<std::string> provenance;

  const Panel* find_panel(const std::string& id) const;
  // Null when the panel or edge index does not exist.
  const Edge* find_edge(const EdgeRef& ref) const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

inline constexpr double kClosureGap = 0.01;

// Translates the panel so the bounding box of its discretized outline starts
// at the origin (panel-local convention).
void normalize_panel_origin(Panel& panel);

}  // namespace gdsl::pattern
