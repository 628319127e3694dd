#pragma once

#include <span>

#include "gdsl/geometry/point.hpp"

namespace gdsl::geometry {

// Symmetric mean nearest-neighbour distance (linear, not squared):
// 0.5 * (mean_a d(a, B) + mean_b d(b, A)). Throws InvalidArgument on empty input.
double chamfer_distance(std::span<const Vec2> a, std::span<const Vec2> b);

struct PrecisionRecall {
  double precision = 0.0;  // fraction of a within threshold of b
  double recall = 0.0;     // fraction of b within threshold of a
  double f_score = 0.0;
};

// Throws InvalidArgument on empty input or threshold <= 0.
PrecisionRecall precision_recall(std::span<const Vec2> a, std::span<const Vec2> b, double threshold);

// Harmonic mean of precision and recall at `threshold` cm; 0 when both are 0.
double f_score(std::span<const Vec2> a, std::span<const Vec2> b, double threshold);

}  // namespace gdsl::geometry
