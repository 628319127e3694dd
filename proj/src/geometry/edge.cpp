#include "gdsl/geometry/edge.hpp"

#include <cmath>

#include "gdsl/error.hpp"

namespace gdsl::geometry {

std::string_view to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::line: return "line";
    case EdgeKind::quadratic: return "quadratic";
    case EdgeKind::cubic: return "cubic";
  }
  return "line";
}

std::optional<EdgeKind> edge_kind_from_string(std::string_view text) {
  if (text == "line") return EdgeKind::line;
  if (text == "quadratic") return EdgeKind::quadratic;
  if (text == "cubic") return EdgeKind::cubic;
  return std::nullopt;
}

Edge Edge::line(Vec2 a, Vec2 b, std::string label) {
  return Edge{EdgeKind::line, a, b, {}, std::move(label)};
}

Edge Edge::quadratic(Vec2 a, Vec2 c, Vec2 b, std::string label) {
  return Edge{EdgeKind::quadratic, a, b, {c, Vec2{}}, std::move(label)};
}

Edge Edge::cubic(Vec2 a, Vec2 c1, Vec2 c2, Vec2 b, std::string label) {
  return Edge{EdgeKind::cubic, a, b, {c1, c2}, std::move(label)};
}

ControlPolygon control_polygon(const Edge& edge) {
  ControlPolygon poly;
  poly.points[poly.size++] = edge.start;
  for (std::size_t i = 0; i < control_count(edge.kind); ++i) poly.points[poly.size++] = edge.control[i];
  poly.points[poly.size++] = edge.end;
  return poly;
}

double chord_length(const Edge& edge) { return distance(edge.start, edge.end); }

bool is_degenerate(const Edge& edge) {
  const double chord = chord_length(edge);
  return !(chord >= kMinChord);
}

void require_non_degenerate(const Edge& edge) {
  if (is_degenerate(edge)) {
    throw DegenerateGeometry("edge '" + edge.label + "' has chord " + std::to_string(chord_length(edge)) +
                             " cm, below the " + std::to_string(kMinChord) + " cm minimum");
  }
}

Vec2 evaluate(const Edge& edge, double t) {
  const double mt = 1.0 - t;
  switch (edge.kind) {
    case EdgeKind::line:
      return edge.start * mt + edge.end * t;
    case EdgeKind::quadratic:
      return edge.start * (mt * mt) + edge.control[0] * (2.0 * mt * t) + edge.end * (t * t);
    case EdgeKind::cubic:
      return edge.start * (mt * mt * mt) + edge.control[0] * (3.0 * mt * mt * t) +
             edge.control[1] * (3.0 * mt * t * t) + edge.end * (t * t * t);
  }
  return edge.start;
}

Edge reversed(const Edge& edge) {
  Edge out = edge;
  std::swap(out.start, out.end);
  if (edge.kind == EdgeKind::cubic) std::swap(out.control[0], out.control[1]);
  return out;
}

Edge translated(const Edge& edge, Vec2 offset) {
  Edge out = edge;
  out.start = edge.start + offset;
  out.end = edge.end + offset;
  for (std::size_t i = 0; i < control_count(edge.kind); ++i) out.control[i] = edge.control[i] + offset;
  return out;
}

Edge transformed(const Edge& edge, double radians, Vec2 offset) {
  const double c = std::cos(radians);
  const double s = std::sin(radians);
  auto apply = [&](Vec2 p) { return Vec2{c * p.x - s * p.y + offset.x, s * p.x + c * p.y + offset.y}; };
  Edge out = edge;
  out.start = apply(edge.start);
  out.end = apply(edge.end);
  for (std::size_t i = 0; i < control_count(edge.kind); ++i) out.control[i] = apply(edge.control[i]);
  return out;
}

std::pair<Edge, Edge> split_edge(const Edge& edge, double t) {
  if (!(t > 0.0 && t < 1.0)) throw InvalidArgument("split parameter must lie in (0, 1)");
  const Vec2 mid = evaluate(edge, t);
  switch (edge.kind) {
    case EdgeKind::line:
      return {Edge::line(edge.start, mid, edge.label), Edge::line(mid, edge.end, edge.label)};
    case EdgeKind::quadratic: {
      const Vec2 a = lerp(edge.start, edge.control[0], t);
      const Vec2 b = lerp(edge.control[0], edge.end, t);
      return {Edge::quadratic(edge.start, a, mid, edge.label), Edge::quadratic(mid, b, edge.end, edge.label)};
    }
    case EdgeKind::cubic: {
      const Vec2 p01 = lerp(edge.start, edge.control[0], t);
      const Vec2 p12 = lerp(edge.control[0], edge.control[1], t);
      const Vec2 p23 = lerp(edge.control[1], edge.end, t);
      const Vec2 p012 = lerp(p01, p12, t);
      const Vec2 p123 = lerp(p12, p23, t);
      return {Edge::cubic(edge.start, p01, p012, mid, edge.label),
              Edge::cubic(mid, p123, p23, edge.end, edge.label)};
    }
  }
  return {edge, edge};
}

Edge bulged(Vec2 a, Vec2 b, double bulge, std::string label) {
  const Vec2 d = b - a;
  const Vec2 c = lerp(a, b, 0.5) + perp(d) * bulge;
  return Edge::quadratic(a, c, b, std::move(label));
}

}  // namespace gdsl::geometry
