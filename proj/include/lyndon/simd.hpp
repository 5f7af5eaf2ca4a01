#pragma once

// Data-parallel inner loops used by the text and parentheses layers.
//
// Every kernel has a portable scalar reference implementation and, on x86-64,
// an AVX2 variant. The variant is picked once at startup from CPUID; setting
// LYNDON_SIMD=scalar in the environment forces the reference kernels.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace lyndon::simd {

inline constexpr std::size_t kNotFound = static_cast<std::size_t>(-1);

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa) noexcept;

struct Kernels {
    Isa isa;

    /// Index of the first byte where a and b differ, or len if they agree.
    std::size_t (*mismatch)(const std::uint8_t* a, const std::uint8_t* b, std::size_t len);

    /// Largest index x < count with values[x] <= bound, or kNotFound.
    std::size_t (*rightmost_at_most)(const std::int32_t* values, std::size_t count, std::int32_t bound);

    /// Smallest index x < count with values[x] <= bound, or kNotFound.
    std::size_t (*leftmost_at_most)(const std::int32_t* values, std::size_t count, std::int32_t bound);

    /// Total number of set bits in words[0..count).
    std::uint64_t (*popcount)(const std::uint64_t* words, std::size_t count);
};

bool supported(Isa isa) noexcept;

/// Kernels for a specific instruction set; throws UsageError when the CPU lacks it.
const Kernels& kernels_for(Isa isa);

/// Best kernels for this machine (honours LYNDON_SIMD).
const Kernels& kernels() noexcept;

namespace scalar {
std::size_t mismatch(const std::uint8_t* a, const std::uint8_t* b, std::size_t len);
std::size_t rightmost_at_most(const std::int32_t* values, std::size_t count, std::int32_t bound);
std::size_t leftmost_at_most(const std::int32_t* values, std::size_t count, std::int32_t bound);
std::uint64_t popcount(const std::uint64_t* words, std::size_t count);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define LYNDON_HAVE_AVX2_KERNELS 1
namespace avx2 {
std::size_t mismatch(const std::uint8_t* a, const std::uint8_t* b, std::size_t len);
std::size_t rightmost_at_most(const std::int32_t* values, std::size_t count, std::int32_t bound);
std::size_t leftmost_at_most(const std::int32_t* values, std::size_t count, std::int32_t bound);
std::uint64_t popcount(const std::uint64_t* words, std::size_t count);
} // namespace avx2
#endif

} // namespace lyndon::simd
