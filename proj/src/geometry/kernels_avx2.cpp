// Compiled with -mavx2 only (no -mfma) so products and sums round exactly like
// the scalar reference.
#include <immintrin.h>

#include <algorithm>
#include <limits>

#include "gdsl/geometry/kernels.hpp"

namespace gdsl::geometry::kernels::avx2 {

void nearest_sq_distance(std::span<const double> qx, std::span<const double> qy,
                         std::span<const double> rx, std::span<const double> ry, std::span<double> out) {
  const std::size_t m = rx.size();
  const std::size_t body = m - m % 4;
  for (std::size_t i = 0; i < qx.size(); ++i) {
    const __m256d px = _mm256_set1_pd(qx[i]);
    const __m256d py = _mm256_set1_pd(qy[i]);
    __m256d best4 = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    for (std::size_t j = 0; j < body; j += 4) {
      const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(rx.data() + j), px);
      const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ry.data() + j), py);
      const __m256d d = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
      best4 = _mm256_min_pd(best4, d);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, best4);
    double best = std::min(std::min(lanes[0], lanes[1]), std::min(lanes[2], lanes[3]));
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
  const std::size_t body = n - n % 4;
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d three = _mm256_set1_pd(3.0);
  __m256d vx[4];
  __m256d vy[4];
  for (std::size_t k = 0; k <= degree; ++k) {
    vx[k] = _mm256_set1_pd(cx[k]);
    vy[k] = _mm256_set1_pd(cy[k]);
  }
  for (std::size_t i = 0; i < body; i += 4) {
    const __m256d u = _mm256_loadu_pd(t.data() + i);
    const __m256d mu = _mm256_sub_pd(one, u);
    __m256d x;
    __m256d y;
    if (degree == 1) {
      x = _mm256_add_pd(_mm256_mul_pd(mu, vx[0]), _mm256_mul_pd(u, vx[1]));
      y = _mm256_add_pd(_mm256_mul_pd(mu, vy[0]), _mm256_mul_pd(u, vy[1]));
    } else if (degree == 2) {
      const __m256d b0 = _mm256_mul_pd(mu, mu);
      const __m256d b1 = _mm256_mul_pd(_mm256_mul_pd(two, mu), u);
      const __m256d b2 = _mm256_mul_pd(u, u);
      x = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(b0, vx[0]), _mm256_mul_pd(b1, vx[1])),
                        _mm256_mul_pd(b2, vx[2]));
      y = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(b0, vy[0]), _mm256_mul_pd(b1, vy[1])),
                        _mm256_mul_pd(b2, vy[2]));
    } else {
      const __m256d b0 = _mm256_mul_pd(_mm256_mul_pd(mu, mu), mu);
      const __m256d b1 = _mm256_mul_pd(_mm256_mul_pd(_mm256_mul_pd(three, mu), mu), u);
      const __m256d b2 = _mm256_mul_pd(_mm256_mul_pd(_mm256_mul_pd(three, mu), u), u);
      const __m256d b3 = _mm256_mul_pd(_mm256_mul_pd(u, u), u);
      x = _mm256_add_pd(
          _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(b0, vx[0]), _mm256_mul_pd(b1, vx[1])), _mm256_mul_pd(b2, vx[2])),
          _mm256_mul_pd(b3, vx[3]));
      y = _mm256_add_pd(
          _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(b0, vy[0]), _mm256_mul_pd(b1, vy[1])), _mm256_mul_pd(b2, vy[2])),
          _mm256_mul_pd(b3, vy[3]));
    }
    _mm256_storeu_pd(out_x.data() + i, x);
    _mm256_storeu_pd(out_y.data() + i, y);
  }
  if (body < n) {
    scalar::eval_bezier(cx, cy, t.subspan(body), out_x.subspan(body), out_y.subspan(body));
  }
}

}  // namespace gdsl::geometry::kernels::avx2
