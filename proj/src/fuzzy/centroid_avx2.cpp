// Compiled with -mavx2; only reached after a runtime CPU check.

#include "vanet/fuzzy/centroid_kernels.hpp"

#include <immintrin.h>

namespace vanet::fuzzy::kernels {

CentroidSums centroid_sums_avx2(const double* xs, const double* tables, std::size_t n,
                                const double* levels, std::size_t terms) noexcept {
    constexpr std::size_t kLanes = 4;
    __m256d weighted = _mm256_setzero_pd();
    __m256d mass = _mm256_setzero_pd();

    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        __m256d agg = _mm256_setzero_pd();
        for (std::size_t t = 0; t < terms; ++t) {
            const __m256d mu = _mm256_loadu_pd(tables + t * n + i);
            // operand order matches the scalar ternaries
            const __m256d clipped = _mm256_min_pd(mu, _mm256_set1_pd(levels[t]));
            agg = _mm256_max_pd(agg, clipped);
        }
        weighted = _mm256_add_pd(weighted, _mm256_mul_pd(_mm256_loadu_pd(xs + i), agg));
        mass = _mm256_add_pd(mass, agg);
    }

    alignas(32) double w[kLanes];
    alignas(32) double m[kLanes];
    _mm256_store_pd(w, weighted);
    _mm256_store_pd(m, mass);
    for (; i < n; ++i) {
        double agg = 0.0;
        for (std::size_t t = 0; t < terms; ++t) {
            const double mu = tables[t * n + i];
            const double clipped = mu < levels[t] ? mu : levels[t];
            agg = agg > clipped ? agg : clipped;
        }
        w[i & 3] += xs[i] * agg;
        m[i & 3] += agg;
    }
    return {(w[0] + w[1]) + (w[2] + w[3]), (m[0] + m[1]) + (m[2] + m[3])};
}

}  // namespace vanet::fuzzy::kernels
