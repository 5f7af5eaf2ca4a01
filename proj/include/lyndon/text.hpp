#pragma once

// Byte strings with 1-based positions and a virtual sentinel at positions 0
// and n+1 that is smaller than every byte. Nothing is ever materialised: a
// suffix that runs off the end compares as if followed by the sentinel.

#include "lyndon/error.hpp"
#include "lyndon/simd.hpp"
#include "lyndon/stats.hpp"

#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <span>
#include <string_view>

namespace lyndon {

/// Non-owning, immutable view of the input bytes. The viewed buffer must
/// outlive the Text.
class Text {
public:
    Text() = default;
    explicit Text(std::span<const std::uint8_t> bytes) noexcept : data_(bytes.data()), size_(bytes.size()) {}
    explicit Text(std::string_view s) noexcept
        : data_(reinterpret_cast<const std::uint8_t*>(s.data())), size_(s.size()) {}

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }
    const std::uint8_t* data() const noexcept { return data_; }
    std::span<const std::uint8_t> bytes() const noexcept { return {data_, size_}; }

    /// Symbol at 1-based pos; no bounds check.
    std::uint8_t operator[](std::size_t pos) const noexcept { return data_[pos - 1]; }

    /// Symbol at pos as an int, with -1 standing for the sentinel outside [1, n].
    int symbol(std::size_t pos) const noexcept {
        return (pos == 0 || pos > size_) ? -1 : static_cast<int>(data_[pos - 1]);
    }

    std::span<const std::uint8_t> slice(std::size_t start, std::size_t len) const noexcept {
        return {data_ + (start - 1), len};
    }

private:
    const std::uint8_t* data_ = nullptr;
    std::size_t size_ = 0;
};

enum class Order { Less, Greater };

struct SuffixOrdering {
    Order outcome;
    std::size_t lce;
    friend bool operator==(const SuffixOrdering&, const SuffixOrdering&) = default;
};

namespace detail {

// Matching bytes of a[0..len) and b[0..len). Short extensions are resolved with
// 8-byte word compares; long ones go to the dispatched SIMD kernel.
inline std::size_t match_length(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) noexcept {
    static_assert(std::endian::native == std::endian::little);
    std::size_t x = 0;
    for (int word = 0; word < 4 && x + 8 <= len; ++word, x += 8) {
        std::uint64_t wa;
        std::uint64_t wb;
        std::memcpy(&wa, a + x, 8);
        std::memcpy(&wb, b + x, 8);
        if (const std::uint64_t diff = wa ^ wb; diff != 0) {
            return x + static_cast<std::size_t>(std::countr_zero(diff) >> 3);
        }
    }
    if (x + 8 <= len) return x + simd::kernels().mismatch(a + x, b + x, len - x);
    while (x < len && a[x] == b[x]) ++x;
    return x;
}

/// lce for positions already known to be legal; the first `skip` symbols are
/// trusted to match.
template <bool Count>
inline std::size_t lce_unchecked(const Text& text, std::size_t i, std::size_t j, std::size_t skip,
                                 StatsSink<Count>& sink) noexcept {
    const std::size_t n = text.size();
    if (i == 0 || j == 0 || i > n || j > n) {
        sink.comparisons(1);
        return 0;
    }
    const std::size_t far = i > j ? i : j;
    const std::size_t limit = n - far + 1;
    const std::size_t ell =
        skip >= limit ? limit : skip + match_length(text.data() + (i - 1 + skip), text.data() + (j - 1 + skip), limit - skip);
    sink.comparisons(ell - skip + 1);
    return ell;
}

/// True iff S_i ≺ S_j given their lce (i != j, both in [0, n+1]).
inline bool suffix_less(const Text& text, std::size_t i, std::size_t j, std::size_t ell) noexcept {
    if (i == 0) return true;
    if (j == 0) return false;
    return text.symbol(i + ell) < text.symbol(j + ell);
}

} // namespace detail

/// Length of the longest common prefix of S_i and S_j, for i, j in [0, n+1].
/// The first `skip` symbols must be known to match. Comparisons beyond skip are
/// added to stats->char_comparisons when stats is non-null.
std::size_t lce(const Text& text, std::size_t i, std::size_t j, std::size_t skip = 0, BuildStats* stats = nullptr);

/// Lexicographic order of two distinct suffixes together with their lce.
SuffixOrdering suffix_compare(const Text& text, std::size_t i, std::size_t j);

/// Whether S[start..start+len) is strictly smaller than each of its proper non-empty suffixes.
bool is_lyndon_word(const Text& text, std::size_t start, std::size_t len);

/// Same test on a standalone byte string.
bool is_lyndon_word(std::span<const std::uint8_t> word);

} // namespace lyndon
