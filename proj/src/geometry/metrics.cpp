#include "gdsl/geometry/metrics.hpp"

#include <cmath>
#include <vector>

#include "gdsl/error.hpp"
#include "gdsl/geometry/kernels.hpp"

namespace gdsl::geometry {
namespace {

struct Columns {
  std::vector<double> x;
  std::vector<double> y;

  explicit Columns(std::span<const Vec2> pts) : x(pts.size()), y(pts.size()) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      x[i] = pts[i].x;
      y[i] = pts[i].y;
    }
  }
};

// Linear nearest distances from every point of `from` to the set `to`.
std::vector<double> nearest_distances(const Columns& from, const Columns& to) {
  std::vector<double> d(from.x.size());
  kernels::nearest_sq_distance(from.x, from.y, to.x, to.y, d);
  for (double& v : d) v = std::sqrt(v);
  return d;
}

void require_non_empty(std::span<const Vec2> a, std::span<const Vec2> b) {
  if (a.empty() || b.empty()) throw InvalidArgument("point-set metric needs two non-empty sets");
}

}  // namespace

double chamfer_distance(std::span<const Vec2> a, std::span<const Vec2> b) {
  require_non_empty(a, b);
  const Columns ca(a);
  const Columns cb(b);
  double sum_a = 0.0;
  for (double d : nearest_distances(ca, cb)) sum_a += d;
  double sum_b = 0.0;
  for (double d : nearest_distances(cb, ca)) sum_b += d;
  return 0.5 * (sum_a / static_cast<double>(a.size()) + sum_b / static_cast<double>(b.size()));
}

PrecisionRecall precision_recall(std::span<const Vec2> a, std::span<const Vec2> b, double threshold) {
  require_non_empty(a, b);
  if (!(threshold > 0.0)) throw InvalidArgument("f_score threshold must be > 0");
  const Columns ca(a);
  const Columns cb(b);
  std::size_t hits_a = 0;
  for (double d : nearest_distances(ca, cb)) hits_a += d <= threshold ? 1 : 0;
  std::size_t hits_b = 0;
  for (double d : nearest_distances(cb, ca)) hits_b += d <= threshold ? 1 : 0;
  PrecisionRecall pr;
  pr.precision = static_cast<double>(hits_a) / static_cast<double>(a.size());
  pr.recall = static_cast<double>(hits_b) / static_cast<double>(b.size());
  const double denom = pr.precision + pr.recall;
  pr.f_score = denom > 0.0 ? 2.0 * pr.precision * pr.recall / denom : 0.0;
  return pr;
}

double f_score(std::span<const Vec2> a, std::span<const Vec2> b, double threshold) {
  return precision_recall(a, b, threshold).f_score;
}

}  // namespace gdsl::geometry
