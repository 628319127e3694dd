#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "gdsl/geometry/point.hpp"

namespace gdsl::geometry {

enum class EdgeKind { line, quadratic, cubic };

std::string_view to_string(EdgeKind kind);
std::optional<EdgeKind> edge_kind_from_string(std::string_view text);

// Number of interior control points implied by the kind (0 / 1 / 2).
constexpr std::size_t control_count(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::line: return 0;
    case EdgeKind::quadratic: return 1;
    case EdgeKind::cubic: return 2;
  }
  return 0;
}

// Minimum chord length for a non-degenerate edge.
inline constexpr double kMinChord = 0.01;

// One parametric boundary segment of a panel. Unused control slots are zero.
struct Edge {
  EdgeKind kind = EdgeKind::line;
  Vec2 start;
  Vec2 end;
  std::array<Vec2, 2> control{};
  std::string label;

  static Edge line(Vec2 a, Vec2 b, std::string label = {});
  static Edge quadratic(Vec2 a, Vec2 c, Vec2 b, std::string label = {});
  static Edge cubic(Vec2 a, Vec2 c1, Vec2 c2, Vec2 b, std::string label = {});

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Bezier control polygon: start, interior controls, end.
struct ControlPolygon {
  std::array<Vec2, 4> points{};
  std::size_t size = 0;
};

ControlPolygon control_polygon(const Edge& edge);
double chord_length(const Edge& edge);
bool is_degenerate(const Edge& edge);

// Throws DegenerateGeometry when the chord is shorter than kMinChord.
void require_non_degenerate(const Edge& edge);

Vec2 evaluate(const Edge& edge, double t);
Edge reversed(const Edge& edge);
Edge translated(const Edge& edge, Vec2 offset);
// Rotation by `radians` about the origin followed by translation.
Edge transformed(const Edge& edge, double radians, Vec2 offset);

// De Casteljau subdivision at parameter t in (0, 1). Labels are copied.
std::pair<Edge, Edge> split_edge(const Edge& edge, double t);

// Quadratic edge whose control sits at the chord midpoint pushed sideways by
// `bulge` times the chord length (positive = left of the travel direction).
Edge bulged(Vec2 a, Vec2 b, double bulge, std::string label = {});

}  // namespace gdsl::geometry
