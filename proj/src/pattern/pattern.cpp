#include "gdsl/pattern/pattern.hpp"

#include <cmath>
#include <numbers>

#include "gdsl/geometry/curve.hpp"

namespace gdsl::pattern {

PanelPlacement PanelPlacement::from_axis_angle(double ax, double ay, double az, double degrees,
                                               std::array<double, 3> translation) {
  PanelPlacement p;
  p.translation = translation;
  const double len = std::sqrt(ax * ax + ay * ay + az * az);
  if (len == 0.0 || degrees == 0.0) return p;
  const double half = degrees * std::numbers::pi / 360.0;
  const double s = std::sin(half) / len;
  p.rotation = {std::cos(half), ax * s, ay * s, az * s};
  return p;
}

double quaternion_norm(const PanelPlacement& placement) {
  double sum = 0.0;
  for (double c : placement.rotation) sum += c * c;
  return std::sqrt(sum);
}

const Panel* Pattern::find_panel(const std::string& id) const {
  for (const Panel& p : panels)
    if (p.id == id) return &p;
  return nullptr;
}

const Edge* Pattern::find_edge(const EdgeRef& ref) const {
  const Panel* panel = find_panel(ref.panel);
  if (panel == nullptr || ref.edge >= panel->edges.size()) return nullptr;
  return &panel->edges[ref.edge];
}

void normalize_panel_origin(Panel& panel) {
  if (panel.edges.empty()) return;
  const auto outline = geometry::discretize_loop(panel.edges);
  const auto box = geometry::bounding_box(outline);
  const geometry::Vec2 shift{-box.min.x, -box.min.y};
  for (Edge& e : panel.edges) e = geometry::translated(e, shift);
}

}  // namespace gdsl::pattern
