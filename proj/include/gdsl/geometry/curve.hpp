#pragma once

#include <cstddef>
#include <span>

#include "gdsl/geometry/edge.hpp"
#include "gdsl/geometry/point.hpp"

namespace gdsl::geometry {

// Arc length by adaptive de Casteljau subdivision: a span is accepted once its
// control-polygon perimeter and chord differ by less than 1e-5 cm.
// Throws DegenerateGeometry for edges with chord < kMinChord.
double curve_length(const Edge& edge);

// n >= 2 points at t = i/(n-1). Throws InvalidArgument for n < 2.
PointSet2D sample_curve(const Edge& edge, std::size_t n);

// Samples used when discretizing curved edges for validation and rendering.
inline constexpr std::size_t kSamplesPerCurvedEdge = 32;

// Closed outline of an edge loop: every edge contributes its samples except
// the last one (which is the next edge's start). Lines contribute only their
// start point.
PointSet2D discretize_loop(std::span<const Edge> edges);

BoundingBox bounding_box(std::span<const Vec2> points);

}  // namespace gdsl::geometry
