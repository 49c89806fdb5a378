#include "invograph/kernels.hpp"

#include <atomic>
#include <cmath>
#include <string>

#include "invograph/error.hpp"

namespace invograph::kernels {

namespace scalar {

double dot(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

double sum_abs_residual(std::span<const double> u, std::span<const double> v, double c) {
    double sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) sum += std::abs(u[i] - c * v[i]);
    return sum;
}

double sum_sq_residual(std::span<const double> u, std::span<const double> v, double c) {
    double sum = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double r = u[i] - c * v[i];
        sum += r * r;
    }
    return sum;
}

std::int64_t sum_sq_diff(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::int64_t d = static_cast<std::int64_t>(a[i]) - b[i];
        sum += d * d;
    }
    return sum;
}

CrossingSums crossing_sums(std::span<const double> src, std::span<const double> dst,
                           std::span<const double> weight, double y) {
    CrossingSums out;
    for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] < y && y < dst[i]) out.right += weight[i];
        else if (src[i] > y && y > dst[i]) out.left += weight[i];
    }
    return out;
}

}  // namespace scalar

namespace {

struct Table {
    Isa isa;
    double (*dot)(std::span<const double>, std::span<const double>);
    double (*sum_abs_residual)(std::span<const double>, std::span<const double>, double);
    double (*sum_sq_residual)(std::span<const double>, std::span<const double>, double);
    std::int64_t (*sum_sq_diff)(std::span<const std::int32_t>, std::span<const std::int32_t>);
    CrossingSums (*crossing_sums)(std::span<const double>, std::span<const double>,
                                  std::span<const double>, double);
};

constexpr Table kScalar{Isa::scalar,           scalar::dot,         scalar::sum_abs_residual,
                        scalar::sum_sq_residual, scalar::sum_sq_diff, scalar::crossing_sums};

#if defined(INVOGRAPH_HAVE_AVX2)
constexpr Table kAvx2{Isa::avx2,           avx2::dot,         avx2::sum_abs_residual,
                      avx2::sum_sq_residual, avx2::sum_sq_diff, avx2::crossing_sums};
#endif

bool cpu_has(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if defined(INVOGRAPH_HAVE_AVX2)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

const Table* table_for(Isa isa) {
#if defined(INVOGRAPH_HAVE_AVX2)
    if (isa == Isa::avx2) return &kAvx2;
#endif
    (void)isa;
    return &kScalar;
}

std::atomic<const Table*> g_active{nullptr};

const Table& active() {
    const Table* t = g_active.load(std::memory_order_acquire);
    if (!t) {
        t = table_for(detected_isa());
        g_active.store(t, std::memory_order_release);
    }
    return *t;
}

void check_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw PreconditionError(std::string(what) + ": length mismatch (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
    }
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return "scalar";
        case Isa::avx2:
            return "avx2";
    }
    return "unknown";
}

Isa detected_isa() { return cpu_has(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

Isa active_isa() { return active().isa; }

void force_isa(std::optional<Isa> isa) {
    if (!isa) {
        g_active.store(table_for(detected_isa()), std::memory_order_release);
        return;
    }
    if (!cpu_has(*isa)) {
        throw PreconditionError("kernel variant '" + std::string(isa_name(*isa)) + "' is not available");
    }
    g_active.store(table_for(*isa), std::memory_order_release);
}

double dot(std::span<const double> a, std::span<const double> b) {
    check_same_size(a.size(), b.size(), "dot");
    return active().dot(a, b);
}

double sum_abs_residual(std::span<const double> u, std::span<const double> v, double c) {
    check_same_size(u.size(), v.size(), "sum_abs_residual");
    return active().sum_abs_residual(u, v, c);
}

double sum_sq_residual(std::span<const double> u, std::span<const double> v, double c) {
    check_same_size(u.size(), v.size(), "sum_sq_residual");
    return active().sum_sq_residual(u, v, c);
}

std::int64_t sum_sq_diff(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
    check_same_size(a.size(), b.size(), "sum_sq_diff");
    return active().sum_sq_diff(a, b);
}

CrossingSums crossing_sums(std::span<const double> src, std::span<const double> dst,
                           std::span<const double> weight, double y) {
    check_same_size(src.size(), dst.size(), "crossing_sums");
    check_same_size(src.size(), weight.size(), "crossing_sums");
    return active().crossing_sums(src, dst, weight, y);
}

}  // namespace invograph::kernels
