#include "vanet/fuzzy/centroid_kernels.hpp"

namespace vanet::fuzzy::kernels {

CentroidSums centroid_sums_scalar(const double* xs, const double* tables, std::size_t n,
                                  const double* levels, std::size_t terms) noexcept {
    double weighted[4] = {0.0, 0.0, 0.0, 0.0};
    double mass[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        double agg = 0.0;
        for (std::size_t t = 0; t < terms; ++t) {
            const double mu = tables[t * n + i];
            const double clipped = mu < levels[t] ? mu : levels[t];
            agg = agg > clipped ? agg : clipped;
        }
        weighted[i & 3] += xs[i] * agg;
        mass[i & 3] += agg;
    }
    return {(weighted[0] + weighted[1]) + (weighted[2] + weighted[3]),
            (mass[0] + mass[1]) + (mass[2] + mass[3])};
}

}  // namespace vanet::fuzzy::kernels
