#include "lyndon/text.hpp"

#include <algorithm>
#include <string>

namespace lyndon {

namespace {

void check_position(const Text& text, std::size_t pos, const char* what) {
    if (pos > text.size() + 1) {
        throw UsageError(std::string(what) + " position " + std::to_string(pos) + " outside [0, " +
                         std::to_string(text.size() + 1) + "]");
    }
}

} // namespace

std::size_t lce(const Text& text, std::size_t i, std::size_t j, std::size_t skip, BuildStats* stats) {
    check_position(text, i, "lce");
    check_position(text, j, "lce");
    if (stats != nullptr) {
        StatsSink<true> sink(stats);
        return detail::lce_unchecked(text, i, j, skip, sink);
    }
    StatsSink<false> sink;
    return detail::lce_unchecked(text, i, j, skip, sink);
}

SuffixOrdering suffix_compare(const Text& text, std::size_t i, std::size_t j) {
    check_position(text, i, "suffix_compare");
    check_position(text, j, "suffix_compare");
    if (i == j) throw UsageError("suffix_compare needs two distinct suffixes");
    const std::size_t ell = lce(text, i, j);
    return {detail::suffix_less(text, i, j, ell) ? Order::Less : Order::Greater, ell};
}

bool is_lyndon_word(std::span<const std::uint8_t> word) {
    if (word.empty()) throw UsageError("is_lyndon_word on an empty range");
    const std::size_t len = word.size();
    for (std::size_t k = 1; k < len; ++k) {
        // word against its suffix word[k..len), both as standalone strings
        const auto [a, b] = std::mismatch(word.begin() + static_cast<std::ptrdiff_t>(k), word.end(), word.begin());
        if (a == word.end()) return false; // the suffix is a prefix, hence smaller
        if (*a < *b) return false;
    }
    return true;
}

bool is_lyndon_word(const Text& text, std::size_t start, std::size_t len) {
    if (len == 0) throw UsageError("is_lyndon_word on an empty range");
    if (start == 0 || start + len - 1 > text.size()) {
        throw UsageError("is_lyndon_word range [" + std::to_string(start) + ", " + std::to_string(start + len) +
                         ") outside the text");
    }
    return is_lyndon_word(text.slice(start, len));
}

} // namespace lyndon
