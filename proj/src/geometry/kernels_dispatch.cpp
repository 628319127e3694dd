#include <atomic>
#include <cstdlib>
#include <string>

#include "gdsl/error.hpp"
#include "gdsl/geometry/kernels.hpp"

namespace gdsl::geometry::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(GDSL_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() {
  Isa isa = detected_isa();
  if (const char* env = std::getenv("GDSL_SIMD")) {
    const std::string want = env;
    if (want == "scalar") isa = Isa::scalar;
    else if (want == "avx2" && isa_available(Isa::avx2)) isa = Isa::avx2;
    else if (want == "neon" && isa_available(Isa::neon)) isa = Isa::neon;
  }
  return isa;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

void check_bezier_args(std::span<const double> cx, std::span<const double> cy, std::span<const double> t,
                       std::span<double> out_x, std::span<double> out_y) {
  if (cx.size() < 2 || cx.size() > 4 || cy.size() != cx.size())
    throw InvalidArgument("eval_bezier needs 2..4 control points");
  if (out_x.size() != t.size() || out_y.size() != t.size())
    throw InvalidArgument("eval_bezier output size mismatch");
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "scalar";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2: return cpu_has_avx2();
    case Isa::neon:
#if defined(GDSL_HAVE_NEON_KERNELS)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() {
  if (isa_available(Isa::avx2)) return Isa::avx2;
  if (isa_available(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa)) throw InvalidArgument(std::string("ISA not available: ") + std::string(to_string(isa)));
  active().store(isa, std::memory_order_relaxed);
}

void nearest_sq_distance(std::span<const double> qx, std::span<const double> qy,
                         std::span<const double> rx, std::span<const double> ry, std::span<double> out) {
  if (qy.size() != qx.size() || out.size() != qx.size() || ry.size() != rx.size())
    throw InvalidArgument("nearest_sq_distance size mismatch");
  if (rx.empty()) throw InvalidArgument("nearest_sq_distance needs a non-empty reference set");
  switch (active_isa()) {
#if defined(GDSL_HAVE_AVX2_KERNELS)
    case Isa::avx2: return avx2::nearest_sq_distance(qx, qy, rx, ry, out);
#endif
#if defined(GDSL_HAVE_NEON_KERNELS)
    case Isa::neon: return neon::nearest_sq_distance(qx, qy, rx, ry, out);
#endif
    default: return scalar::nearest_sq_distance(qx, qy, rx, ry, out);
  }
}

void eval_bezier(std::span<const double> cx, std::span<const double> cy, std::span<const double> t,
                 std::span<double> out_x, std::span<double> out_y) {
  check_bezier_args(cx, cy, t, out_x, out_y);
  switch (active_isa()) {
#if defined(GDSL_HAVE_AVX2_KERNELS)
    case Isa::avx2: return avx2::eval_bezier(cx, cy, t, out_x, out_y);
#endif
#if defined(GDSL_HAVE_NEON_KERNELS)
    case Isa::neon: return neon::eval_bezier(cx, cy, t, out_x, out_y);
#endif
    default: return scalar::eval_bezier(cx, cy, t, out_x, out_y);
  }
}

}  // namespace gdsl::geometry::kernels
