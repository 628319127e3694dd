#include "gdsl/geometry/curve.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <vector>

#include "gdsl/error.hpp"
#include "gdsl/geometry/kernels.hpp"

namespace gdsl::geometry {
namespace {

constexpr double kSpanTolerance = 1e-5;
constexpr int kMaxDepth = 40;

struct Span {
  std::array<Vec2, 4> p{};
  std::size_t n = 0;  // number of control points (degree + 1)
};

double perimeter(const Span& s) {
  double total = 0.0;
  for (std::size_t i = 1; i < s.n; ++i) total += distance(s.p[i - 1], s.p[i]);
  return total;
}

std::pair<Span, Span> halve(const Span& s) {
  // De Casteljau at t = 0.5 for any degree up to 3.
  std::array<std::array<Vec2, 4>, 4> tri{};
  for (std::size_t i = 0; i < s.n; ++i) tri[0][i] = s.p[i];
  for (std::size_t r = 1; r < s.n; ++r)
    for (std::size_t i = 0; i + r < s.n; ++i) tri[r][i] = lerp(tri[r - 1][i], tri[r - 1][i + 1], 0.5);
  Span left;
  Span right;
  left.n = right.n = s.n;
  for (std::size_t r = 0; r < s.n; ++r) {
    left.p[r] = tri[r][0];
    right.p[s.n - 1 - r] = tri[r][s.n - 1 - r];
  }
  return {left, right};
}

double span_length(const Span& s, int depth) {
  const double chord = distance(s.p[0], s.p[s.n - 1]);
  const double poly = perimeter(s);
  if (poly - chord < kSpanTolerance || depth >= kMaxDepth) {
    // Gravesen's estimate: (2 * chord + (degree - 1) * polygon) / (degree + 1).
    const double degree = static_cast<double>(s.n - 1);
    return (2.0 * chord + (degree - 1.0) * poly) / (degree + 1.0);
  }
  auto [a, b] = halve(s);
  return span_length(a, depth + 1) + span_length(b, depth + 1);
}

void append_samples(const Edge& edge, std::size_t n, bool include_last, PointSet2D& out) {
  const ControlPolygon poly = control_polygon(edge);
  std::array<double, 4> cx{};
  std::array<double, 4> cy{};
  for (std::size_t i = 0; i < poly.size; ++i) {
    cx[i] = poly.points[i].x;
    cy[i] = poly.points[i].y;
  }
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  std::vector<double> xs(n);
  std::vector<double> ys(n);
  kernels::eval_bezier(std::span<const double>(cx.data(), poly.size), std::span<const double>(cy.data(), poly.size), t,
                       xs, ys);
  const std::size_t count = include_last ? n : n - 1;
  for (std::size_t i = 0; i < count; ++i) out.push_back({xs[i], ys[i]});
}

}  // namespace

double curve_length(const Edge& edge) {
  require_non_degenerate(edge);
  if (edge.kind == EdgeKind::line) return chord_length(edge);
  const ControlPolygon poly = control_polygon(edge);
  Span s;
  s.n = poly.size;
  s.p = poly.points;
  return span_length(s, 0);
}

PointSet2D sample_curve(const Edge& edge, std::size_t n) {
  if (n < 2) throw InvalidArgument("sample_curve needs n >= 2");
  PointSet2D out;
  out.reserve(n);
  append_samples(edge, n, true, out);
  // Endpoints are exact by construction of the Bernstein basis at t = 0 and 1,
  // but pin them so callers can rely on equality.
  out.front() = edge.start;
  out.back() = edge.end;
  return out;
}

PointSet2D discretize_loop(std::span<const Edge> edges) {
  PointSet2D out;
  for (const Edge& e : edges) {
    const std::size_t n = e.kind == EdgeKind::line ? 2 : kSamplesPerCurvedEdge;
    const std::size_t first = out.size();
    append_samples(e, n, false, out);
    out[first] = e.start;
  }
  return out;
}

BoundingBox bounding_box(std::span<const Vec2> points) {
  BoundingBox box{{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()},
                  {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()}};
  for (Vec2 p : points) {
    box.min.x = std::min(box.min.x, p.x);
    box.min.y = std::min(box.min.y, p.y);
    box.max.x = std::max(box.max.x, p.x);
    box.max.y = std::max(box.max.y, p.y);
  }
  return box;
}

}  // namespace gdsl::geometry
