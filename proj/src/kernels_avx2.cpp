// Built with -mavx2; only reached after a cpuid check.
#include <immintrin.h>

#include "invograph/kernels.hpp"

namespace invograph::kernels::avx2 {

namespace {

double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

std::int64_t hsum_epi64(__m256i v) {
    alignas(32) std::int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(&a[i]), _mm256_loadu_pd(&b[i])));
        acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(&a[i + 4]), _mm256_loadu_pd(&b[i + 4])));
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(&a[i]), _mm256_loadu_pd(&b[i])));
    }
    double sum = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) sum += a[i] * b[i];
    return sum;
}

double sum_abs_residual(std::span<const double> u, std::span<const double> v, double c) {
    const std::size_t n = u.size();
    const __m256d scale = _mm256_set1_pd(c);
    const __m256d sign = _mm256_set1_pd(-0.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d r = _mm256_sub_pd(_mm256_loadu_pd(&u[i]), _mm256_mul_pd(scale, _mm256_loadu_pd(&v[i])));
        acc = _mm256_add_pd(acc, _mm256_andnot_pd(sign, r));
    }
    double sum = hsum(acc);
    for (; i < n; ++i) {
        const double r = u[i] - c * v[i];
        sum += r < 0 ? -r : r;
    }
    return sum;
}

double sum_sq_residual(std::span<const double> u, std::span<const double> v, double c) {
    const std::size_t n = u.size();
    const __m256d scale = _mm256_set1_pd(c);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d r = _mm256_sub_pd(_mm256_loadu_pd(&u[i]), _mm256_mul_pd(scale, _mm256_loadu_pd(&v[i])));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(r, r));
    }
    double sum = hsum(acc);
    for (; i < n; ++i) {
        const double r = u[i] - c * v[i];
        sum += r * r;
    }
    return sum;
}

std::int64_t sum_sq_diff(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
    const std::size_t n = a.size();
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i x = _mm256_cvtepi32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(&a[i])));
        const __m256i y = _mm256_cvtepi32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(&b[i])));
        const __m256i d = _mm256_sub_epi64(x, y);
        // |d| < 2^32, so the low-half signed multiply is exact.
        acc = _mm256_add_epi64(acc, _mm256_mul_epi32(d, d));
    }
    std::int64_t sum = hsum_epi64(acc);
    for (; i < n; ++i) {
        const std::int64_t d = static_cast<std::int64_t>(a[i]) - b[i];
        sum += d * d;
    }
    return sum;
}

CrossingSums crossing_sums(std::span<const double> src, std::span<const double> dst,
                           std::span<const double> weight, double y) {
    const std::size_t n = src.size();
    const __m256d yy = _mm256_set1_pd(y);
    __m256d right = _mm256_setzero_pd();
    __m256d left = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d s = _mm256_loadu_pd(&src[i]);
        const __m256d d = _mm256_loadu_pd(&dst[i]);
        const __m256d w = _mm256_loadu_pd(&weight[i]);
        const __m256d to_right = _mm256_and_pd(_mm256_cmp_pd(s, yy, _CMP_LT_OQ), _mm256_cmp_pd(yy, d, _CMP_LT_OQ));
        const __m256d to_left = _mm256_and_pd(_mm256_cmp_pd(s, yy, _CMP_GT_OQ), _mm256_cmp_pd(yy, d, _CMP_GT_OQ));
        right = _mm256_add_pd(right, _mm256_and_pd(to_right, w));
        left = _mm256_add_pd(left, _mm256_and_pd(to_left, w));
    }
    CrossingSums out{hsum(right), hsum(left)};
    for (; i < n; ++i) {
        if (src[i] < y && y < dst[i]) out.right += weight[i];
        else if (src[i] > y && y > dst[i]) out.left += weight[i];
    }
    return out;
}

}  // namespace invograph::kernels::avx2
