#include "gdsl/geometry/polygon.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "gdsl/error.hpp"

namespace gdsl::geometry {
namespace {

bool on_segment(Vec2 a, Vec2 b, Vec2 p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

struct Side {
  Vec2 a;
  Vec2 b;
  double xmin;
  double xmax;
  double ymin;
  double ymax;
};

// Adjacent sides (a -> p) and (p -> c) overlap beyond p only when they are
// collinear and fold back onto each other.
bool adjacent_overlap(Vec2 a, Vec2 p, Vec2 c) {
  return orientation(a, p, c) == 0 && dot(a - p, c - p) > 0.0;
}

}  // namespace

int orientation(Vec2 a, Vec2 b, Vec2 c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

bool is_simple_polygon(std::span<const Vec2> points) {
  const std::size_t n = points.size();
  if (n < 3) throw InvalidArgument("is_simple_polygon needs at least 3 points");

  std::vector<Side> sides(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = points[i];
    const Vec2 b = points[(i + 1) % n];
    if (a == b) return false;
    sides[i] = {a, b, std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacent_overlap(points[i], points[(i + 1) % n], points[(i + 2) % n])) return false;
  }

  // Sweep along x: only sides whose x-extents overlap can intersect.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return sides[l].xmin < sides[r].xmin || (sides[l].xmin == sides[r].xmin && l < r);
  });

  std::vector<std::size_t> active;
  for (std::size_t idx : order) {
    const Side& s = sides[idx];
    std::erase_if(active, [&](std::size_t k) { return sides[k].xmax < s.xmin; });
    for (std::size_t k : active) {
      const std::size_t gap = idx > k ? idx - k : k - idx;
      if (gap == 1 || gap == n - 1) continue;  // adjacent, handled above
      const Side& o = sides[k];
      if (o.ymax < s.ymin || s.ymax < o.ymin) continue;
      if (segments_intersect(s.a, s.b, o.a, o.b)) return false;
    }
    active.push_back(idx);
  }
  return true;
}

}  // namespace gdsl::geometry
