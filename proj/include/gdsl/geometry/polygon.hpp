#pragma once

#include <span>

#include "gdsl/geometry/point.hpp"

namespace gdsl::geometry {

// Sign of the turn a -> b -> c: +1 left, -1 right, 0 collinear.
int orientation(Vec2 a, Vec2 b, Vec2 c);

// True when closed segments [a, b] and [c, d] share at least one point.
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

// True iff the closed polyline through `points` has no zero-length side, no
// two non-adjacent sides intersect, and adjacent sides meet only at their
// shared vertex. Throws InvalidArgument for fewer than 3 points.
bool is_simple_polygon(std::span<const Vec2> points);

}  // namespace gdsl::geometry
