#pragma once

// Aggregation + centroid accumulation over the sampled output universe.
//
// For every sample i the aggregated membership is
//     agg[i] = max_t min(levels[t], tables[t * n + i])
// and the kernels return sum(xs[i] * agg[i]) and sum(agg[i]).
//
// All variants accumulate into four interleaved lanes (sample i goes to lane
// i % 4) and reduce as (l0 + l1) + (l2 + l3). The scalar reference follows the
// same order, so every ISA produces bit-identical sums.

#include <cstddef>

namespace vanet::fuzzy::kernels {

struct CentroidSums {
    double weighted = 0.0;
    double mass = 0.0;
};

using CentroidKernel = CentroidSums (*)(const double* xs, const double* tables, std::size_t n,
                                        const double* levels, std::size_t terms) noexcept;

CentroidSums centroid_sums_scalar(const double* xs, const double* tables, std::size_t n,
                                  const double* levels, std::size_t terms) noexcept;

#if defined(__x86_64__) || defined(_M_X64)
CentroidSums centroid_sums_avx2(const double* xs, const double* tables, std::size_t n,
                                const double* levels, std::size_t terms) noexcept;
#endif

#if defined(__aarch64__)
CentroidSums centroid_sums_neon(const double* xs, const double* tables, std::size_t n,
                                const double* levels, std::size_t terms) noexcept;
#endif

enum class Isa { Scalar, Avx2, Neon };

const char* to_string(Isa isa) noexcept;

/// True when this build contains the variant and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

/// Best available variant, detected once. VANET_KERNEL=scalar|avx2|neon overrides
/// the choice when the requested ISA is available.
Isa active_isa() noexcept;

CentroidKernel kernel_for(Isa isa) noexcept;

}  // namespace vanet::fuzzy::kernels
