#include <algorithm>
#include <limits>

#include "gdsl/geometry/kernels.hpp"

namespace gdsl::geometry::kernels::scalar {

void nearest_sq_distance(std::span<const double> qx, std::span<const double> qy,
                         std::span<const double> rx, std::span<const double> ry, std::span<double> out) {
  const std::size_t m = rx.size();
  for (std::size_t i = 0; i < qx.size(); ++i) {
    const double px = qx[i];
    const double py = qy[i];
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < m; ++j) {
      const double dx = rx[j] - px;
      const double dy = ry[j] - py;
      const double d = dx * dx + dy * dy;
      best = std::min(best, d);
    }
    out[i] = best;
  }
}

void eval_bezier(std::span<const double> cx, std::span<const double> cy, std::span<const double> t,
                 std::span<double> out_x, std::span<double> out_y) {
  const std::size_t degree = cx.size() - 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double u = t[i];
    const double mu = 1.0 - u;
    switch (degree) {
      case 1:
        out_x[i] = mu * cx[0] + u * cx[1];
        out_y[i] = mu * cy[0] + u * cy[1];
        break;
      case 2: {
        const double b0 = mu * mu;
        const double b1 = 2.0 * mu * u;
        const double b2 = u * u;
        out_x[i] = b0 * cx[0] + b1 * cx[1] + b2 * cx[2];
        out_y[i] = b0 * cy[0] + b1 * cy[1] + b2 * cy[2];
        break;
      }
      default: {
        const double b0 = mu * mu * mu;
        const double b1 = 3.0 * mu * mu * u;
        const double b2 = 3.0 * mu * u * u;
        const double b3 = u * u * u;
        out_x[i] = b0 * cx[0] + b1 * cx[1] + b2 * cx[2] + b3 * cx[3];
        out_y[i] = b0 * cy[0] + b1 * cy[1] + b2 * cy[2] + b3 * cy[3];
        break;
      }
    }
  }
}

}  // namespace gdsl::geometry::kernels::scalar
