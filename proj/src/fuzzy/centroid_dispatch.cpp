#include <cstdlib>
#include <string_view>

#include "vanet/fuzzy/centroid_kernels.hpp"

namespace vanet::fuzzy::kernels {

const char* to_string(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
    }
    return "?";
}

bool isa_available(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::Neon:
#if defined(__aarch64__)
            return true;
#else
            return false;
#endif
    }
    return false;
}

namespace {

Isa detect() noexcept {
    if (const char* env = std::getenv("VANET_KERNEL")) {
        const std::string_view want(env);
        for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
            if (want == to_string(isa) && isa_available(isa)) return isa;
        }
    }
    if (isa_available(Isa::Avx2)) return Isa::Avx2;
    if (isa_available(Isa::Neon)) return Isa::Neon;
    return Isa::Scalar;
}

}  // namespace

Isa active_isa() noexcept {
    static const Isa isa = detect();
    return isa;
}

CentroidKernel kernel_for(Isa isa) noexcept {
    switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::Avx2: return &centroid_sums_avx2;
#endif
#if defined(__aarch64__)
        case Isa::Neon: return &centroid_sums_neon;
#endif
        default: return &centroid_sums_scalar;
    }
}

}  // namespace vanet::fuzzy::kernels
