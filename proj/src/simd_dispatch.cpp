#include "lyndon/simd.hpp"

#include "lyndon/error.hpp"

#include <cstdlib>
#include <string>

namespace lyndon::simd {

namespace {

constexpr Kernels kScalar{Isa::scalar, &scalar::mismatch, &scalar::rightmost_at_most,
                          &scalar::leftmost_at_most, &scalar::popcount};

#ifdef LYNDON_HAVE_AVX2_KERNELS
constexpr Kernels kAvx2{Isa::avx2, &avx2::mismatch, &avx2::rightmost_at_most, &avx2::leftmost_at_most,
                        &avx2::popcount};
#endif

const Kernels& pick() noexcept {
    if (const char* forced = std::getenv("LYNDON_SIMD"); forced != nullptr && std::string(forced) == "scalar") {
        return kScalar;
    }
#ifdef LYNDON_HAVE_AVX2_KERNELS
    if (supported(Isa::avx2)) return kAvx2;
#endif
    return kScalar;
}

} // namespace

std::string_view to_string(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    }
    return "unknown";
}

bool supported(Isa isa) noexcept {
    switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(LYNDON_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

const Kernels& kernels_for(Isa isa) {
    if (!supported(isa)) throw UsageError("instruction set not available: " + std::string(to_string(isa)));
#ifdef LYNDON_HAVE_AVX2_KERNELS
    if (isa == Isa::avx2) return kAvx2;
#endif
    return kScalar;
}

const Kernels& kernels() noexcept {
    static const Kernels& chosen = pick();
    return chosen;
}

} // namespace lyndon::simd
