#include "lyndon/simd.hpp"

#include <bit>

namespace lyndon::simd::scalar {

std::size_t mismatch(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) {
    for (std::size_t x = 0; x < len; ++x) {
        if (a[x] != b[x]) return x;
    }
    return len;
}

std::size_t rightmost_at_most(const std::int32_t* values, std::size_t count, std::int32_t bound) {
    for (std::size_t x = count; x-- > 0;) {
        if (values[x] <= bound) return x;
    }
    return kNotFound;
}

std::size_t leftmost_at_most(const std::int32_t* values, std::size_t count, std::int32_t bound) {
    for (std::size_t x = 0; x < count; ++x) {
        if (values[x] <= bound) return x;
    }
    return kNotFound;
}

std::uint64_t popcount(const std::uint64_t* words, std::size_t count) {
    std::uint64_t total = 0;
    for (std::size_t x = 0; x < count; ++x) total += static_cast<std::uint64_t>(std::popcount(words[x]));
    return total;
}

} // namespace lyndon::simd::scalar
