#include "vanet/fuzzy/centroid_kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace vanet::fuzzy::kernels {

// Two float64x2 halves stand in for the four accumulation lanes.
CentroidSums centroid_sums_neon(const double* xs, const double* tables, std::size_t n,
                                const double* levels, std::size_t terms) noexcept {
    float64x2_t w_lo = vdupq_n_f64(0.0), w_hi = vdupq_n_f64(0.0);
    float64x2_t m_lo = vdupq_n_f64(0.0), m_hi = vdupq_n_f64(0.0);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float64x2_t agg_lo = vdupq_n_f64(0.0), agg_hi = vdupq_n_f64(0.0);
        for (std::size_t t = 0; t < terms; ++t) {
            const float64x2_t level = vdupq_n_f64(levels[t]);
            const double* row = tables + t * n + i;
            agg_lo = vmaxq_f64(agg_lo, vminq_f64(vld1q_f64(row), level));
            agg_hi = vmaxq_f64(agg_hi, vminq_f64(vld1q_f64(row + 2), level));
        }
        w_lo = vaddq_f64(w_lo, vmulq_f64(vld1q_f64(xs + i), agg_lo));
        w_hi = vaddq_f64(w_hi, vmulq_f64(vld1q_f64(xs + i + 2), agg_hi));
        m_lo = vaddq_f64(m_lo, agg_lo);
        m_hi = vaddq_f64(m_hi, agg_hi);
    }

    double w[4], m[4];
    vst1q_f64(w, w_lo);
    vst1q_f64(w + 2, w_hi);
    vst1q_f64(m, m_lo);
    vst1q_f64(m + 2, m_hi);
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

#endif
