// Compiled with -mavx2; only reached after a CPUID check.
#include "lyndon/simd.hpp"

#include <immintrin.h>

#include <bit>

namespace lyndon::simd::avx2 {

std::size_t mismatch(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) {
    std::size_t x = 0;
    for (; x + 32 <= len; x += 32) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + x));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + x));
        const auto equal = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(va, vb)));
        if (equal != 0xFFFFFFFFu) return x + static_cast<std::size_t>(std::countr_one(equal));
    }
    for (; x < len; ++x) {
        if (a[x] != b[x]) return x;
    }
    return len;
}

namespace {

// Bit y of the result is set iff values[y] <= bound for the 8 lanes at p.
inline unsigned at_most_mask(const std::int32_t* p, __m256i bound) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
    const __m256i greater = _mm256_cmpgt_epi32(v, bound);
    return ~static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(greater))) & 0xFFu;
}

} // namespace

std::size_t rightmost_at_most(const std::int32_t* values, std::size_t count, std::int32_t bound) {
    const __m256i b = _mm256_set1_epi32(bound);
    std::size_t end = count;
    while (end >= 8) {
        const unsigned mask = at_most_mask(values + end - 8, b);
        if (mask != 0) return end - 8 + static_cast<std::size_t>(31 - std::countl_zero(mask));
        end -= 8;
    }
    while (end-- > 0) {
        if (values[end] <= bound) return end;
    }
    return kNotFound;
}

std::size_t leftmost_at_most(const std::int32_t* values, std::size_t count, std::int32_t bound) {
    const __m256i b = _mm256_set1_epi32(bound);
    std::size_t x = 0;
    for (; x + 8 <= count; x += 8) {
        const unsigned mask = at_most_mask(values + x, b);
        if (mask != 0) return x + static_cast<std::size_t>(std::countr_zero(mask));
    }
    for (; x < count; ++x) {
        if (values[x] <= bound) return x;
    }
    return kNotFound;
}

std::uint64_t popcount(const std::uint64_t* words, std::size_t count) {
    // Nibble lookup (Mula et al.), accumulated with SAD into 64-bit lanes.
    const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                            0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();
    std::size_t x = 0;
    for (; x + 4 <= count; x += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + x));
        const __m256i lo = _mm256_and_si256(v, low_mask);
        const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
        const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; x < count; ++x) total += static_cast<std::uint64_t>(std::popcount(words[x]));
    return total;
}

} // namespace lyndon::simd::avx2
