#pragma once

// Data-parallel inner loops of the geometry kernel.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, an AVX2 (x86-64) or NEON (aarch64) variant. The vector variants
// evaluate the same expressions in the same order without fused multiply-add,
// so their results are bit-identical to the scalar reference; the
// equivalence tests assert exact equality.
//
// Callers normally use the unsuffixed entry points, which dispatch on the ISA
// detected at runtime (overridable with GDSL_SIMD=scalar|avx2|neon).

#include <span>
#include <string_view>

namespace gdsl::geometry::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa);

// Best ISA this CPU and build support.
Isa detected_isa();
// ISA used by the dispatching entry points.
Isa active_isa();
bool isa_available(Isa isa);
// Forces the dispatch target; throws InvalidArgument when unavailable.
void set_active_isa(Isa isa);

// out[i] = min_j |q_i - r_j|^2. Requires qx/qy/out of equal length and rx/ry
// of equal, non-zero length.
void nearest_sq_distance(std::span<const double> qx, std::span<const double> qy,
                         std::span<const double> rx, std::span<const double> ry, std::span<double> out);

// Bernstein evaluation of a Bezier of degree 1..3 (`cx`/`cy` hold degree+1
// control coordinates) at each parameter in `t`.
void eval_bezier(std::span<const double> cx, std::span<const double> cy, std::span<const double> t,
                 std::span<double> out_x, std::span<double> out_y);

namespace scalar {
void nearest_sq_distance(std::span<const double> qx, std::span<const double> qy,
                         std::span<const double> rx, std::span<const double> ry, std::span<double> out);
void eval_bezier(std::span<const double> cx, std::span<const double> cy, std::span<const double> t,
                 std::span<double> out_x, std::span<double> out_y);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define GDSL_HAVE_AVX2_KERNELS 1
namespace avx2 {
void nearest_sq_distance(std::span<const double> qx, std::span<const double> qy,
                         std::span<const double> rx, std::span<const double> ry, std::span<double> out);
void eval_bezier(std::span<const double> cx, std::span<const double> cy, std::span<const double> t,
                 std::span<double> out_x, std::span<double> out_y);
}  // namespace avx2
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
#define GDSL_HAVE_NEON_KERNELS 1
namespace neon {
void nearest_sq_distance(std::span<const double> qx, std::span<const double> qy,
                         std::span<const double> rx, std::span<const double> ry, std::span<double> out);
void eval_bezier(std::span<const double> cx, std::span<const double> cy, std::span<const double> t,
                 std::span<double> out_x, std::span<double> out_y);
}  // namespace neon
#endif

}  // namespace gdsl::geometry::kernels
