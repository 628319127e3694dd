#pragma once

#include <string>
#include <vector>

#include "gdsl/pattern/pattern.hpp"

namespace fixtures {

using gdsl::geometry::Vec2;
using gdsl::pattern::Edge;
using gdsl::pattern::Panel;
using gdsl::pattern::Pattern;

// Closed polygon of line edges through `pts`.
inline Panel polygon_panel(std::string id, const std::vector<Vec2>& pts) {
  Panel p;
  p.id = std::move(id);
  for (std::size_t i = 0; i < pts.size(); ++i) p.edges.push_back(Edge::line(pts[i], pts[(i + 1) % pts.size()]));
  return p;
}

inline Panel square(std::string id, double size = 1.0) {
  return polygon_panel(std::move(id), {{0, 0}, {size, 0}, {size, size}, {0, size}});
}

inline Pattern two_squares_stitched() {
  Pattern p;
  p.panels = {square("a"), square("b")};
  p.stitches.push_back({{"a", 1}, {"b", 3}, 1.0});
  return p;
}

inline Panel bowtie(std::string id) { return polygon_panel(std::move(id), {{0, 0}, {1, 1}, {1, 0}, {0, 1}}); }

}  // namespace fixtures
