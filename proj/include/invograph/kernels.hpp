#pragma once

// Data-parallel inner loops shared by the solvers and the graph metrics.
//
// Every kernel has a scalar reference in `kernels::scalar`. Wider variants
// (currently AVX2 on x86-64) are compiled into their own translation unit and
// picked once at runtime from cpuid. The top-level functions dispatch to the
// active variant. Vector variants reassociate floating-point sums, so results
// agree with the scalar reference to rounding, not bit for bit.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace invograph::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

// Best variant this binary and CPU both support.
Isa detected_isa();
Isa active_isa();

// Pins the dispatch (tests and benchmarks). nullopt restores detection.
// Throws PreconditionError if the requested variant is unavailable.
void force_isa(std::optional<Isa> isa);

// Sum of products.
double dot(std::span<const double> a, std::span<const double> b);

// Sum of |u_i - c v_i|.
double sum_abs_residual(std::span<const double> u, std::span<const double> v, double c);

// Sum of (u_i - c v_i)^2.
double sum_sq_residual(std::span<const double> u, std::span<const double> v, double c);

// Sum of (a_i - b_i)^2 over integer ranks.
std::int64_t sum_sq_diff(std::span<const std::int32_t> a, std::span<const std::int32_t> b);

struct CrossingSums {
    double right = 0.0;  // sum of w where src < y < dst
    double left = 0.0;   // sum of w where src > y > dst
};

// Strict inequalities: an endpoint sitting exactly at y never crosses it.
CrossingSums crossing_sums(std::span<const double> src, std::span<const double> dst,
                           std::span<const double> weight, double y);

namespace scalar {
double dot(std::span<const double> a, std::span<const double> b);
double sum_abs_residual(std::span<const double> u, std::span<const double> v, double c);
double sum_sq_residual(std::span<const double> u, std::span<const double> v, double c);
std::int64_t sum_sq_diff(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
CrossingSums crossing_sums(std::span<const double> src, std::span<const double> dst,
                           std::span<const double> weight, double y);
}  // namespace scalar

#if defined(INVOGRAPH_HAVE_AVX2)
namespace avx2 {
double dot(std::span<const double> a, std::span<const double> b);
double sum_abs_residual(std::span<const double> u, std::span<const double> v, double c);
double sum_sq_residual(std::span<const double> u, std::span<const double> v, double c);
std::int64_t sum_sq_diff(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
CrossingSums crossing_sums(std::span<const double> src, std::span<const double> dst,
                           std::span<const double> weight, double y);
}  // namespace avx2
#endif

}  // namespace invograph::kernels
