// Built with -ffp-contract=off so the compiler does not fuse the explicit
// multiply/add pairs below.
#include <arm_neon.h>

#include <algorithm>
#include <limits>

#include "gdsl/geometry/kernels.hpp"

namespace gdsl::geometry::kernels::neon {

void nearest_sq_distance(std::span<const double> qx, std::span<const double> qy,
                         std::span<const double> rx, std::span<const double> ry, std::span<double> out) {
  const std::size_t m = rx.size();
  const std::size_t body = m - m % 2;
  for (std::size_t i = 0; i < qx.size(); ++i) {
    const float64x2_t px = vdupq_n_f64(qx[i]);
    const float64x2_t py = vdupq_n_f64(qy[i]);
    float64x2_t best2 = vdupq_n_f64(std::numeric_limits<double>::infinity());
    for (std::size_t j = 0; j < body; j += 2) {
      const float64x2_t dx = vsubq_f64(vld1q_f64(rx.data() + j), px);
      const float64x2_t dy = vsubq_f64(vld1q_f64(ry.data() + j), py);
      const float64x2_t d = vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy));
      best2 = vminq_f64(best2, d);
    }
    double best = std::min(vgetq_lane_f64(best2, 0), vgetq_lane_f64(best2, 1));
    for (std::size_t j = body; j < m; ++j) {
      const double dx = rx[j] - qx[i];
      const double dy = ry[j] - qy[i];
      best = std::min(best, dx * dx + dy * dy);
    }
    out[i] = best;
  }
}

void eval_bezier(std::span<const double> cx, std::span<const double> cy, std::span<const double> t,
                 std::span<double> out_x, std::span<double> out_y) {
  const std::size_t degree = cx.size() - 1;
  const std::size_t n = t.size();
  const std::size_t body = n - n % 2;
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t two = vdupq_n_f64(2.0);
  const float64x2_t three = vdupq_n_f64(3.0);
  for (std::size_t i = 0; i < body; i += 2) {
    const float64x2_t u = vld1q_f64(t.data() + i);
    const float64x2_t mu = vsubq_f64(one, u);
    float64x2_t b[4];
    std::size_t count = degree + 1;
    if (degree == 1) {
      b[0] = mu;
      b[1] = u;
    } else if (degree == 2) {
      b[0] = vmulq_f64(mu, mu);
      b[1] = vmulq_f64(vmulq_f64(two, mu), u);
      b[2] = vmulq_f64(u, u);
    } else {
      b[0] = vmulq_f64(vmulq_f64(mu, mu), mu);
      b[1] = vmulq_f64(vmulq_f64(vmulq_f64(three, mu), mu), u);
      b[2] = vmulq_f64(vmulq_f64(vmulq_f64(three, mu), u), u);
      b[3] = vmulq_f64(vmulq_f64(u, u), u);
    }
    float64x2_t x = vmulq_f64(b[0], vdupq_n_f64(cx[0]));
    float64x2_t y = vmulq_f64(b[0], vdupq_n_f64(cy[0]));
    for (std::size_t k = 1; k < count; ++k) {
      x = vaddq_f64(x, vmulq_f64(b[k], vdupq_n_f64(cx[k])));
      y = vaddq_f64(y, vmulq_f64(b[k], vdupq_n_f64(cy[k])));
    }
    vst1q_f64(out_x.data() + i, x);
    vst1q_f64(out_y.data() + i, y);
  }
  if (body < n) {
    scalar::eval_bezier(cx, cy, t.subspan(body), out_x.subspan(body), out_y.subspan(body));
  }
}

}  // namespace gdsl::geometry::kernels::neon
