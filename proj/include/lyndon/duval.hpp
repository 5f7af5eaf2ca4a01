#pragma once

// Lyndon factorization in a single left-to-right pass and detection of
// extended Lyndon runs suf(mu) . mu^t . pre(mu) with t >= 2.

#include "lyndon/error.hpp"
#include "lyndon/simd.hpp"
#include "lyndon/stats.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lyndon::duval {

/// Emits the 1-based end positions d_1 < ... < d_m of the Lyndon factors, one
/// per call, using O(1) words of state.
template <bool Count = false>
class FactorStream {
public:
    explicit FactorStream(std::span<const std::uint8_t> s, StatsSink<Count> sink = StatsSink<Count>{})
        : s_(s), sink_(sink) {
        if (s.empty()) throw UsageError("Lyndon factorization of an empty string");
    }

    std::optional<std::size_t> next() {
        if (!pending_) {
            if (start_ >= s_.size()) return std::nullopt;
            scan();
        }
        start_ += period_;
        if (start_ > repeat_limit_) pending_ = false;
        return start_;
    }

private:
    // One round of Duval's algorithm from start_: finds the longest prefix of
    // the remainder of the form w^k w' with w Lyndon and w' a proper prefix of w.
    void scan() {
        std::size_t i = start_;
        std::size_t j = start_ + 1;
        const std::size_t n = s_.size();
        while (j < n) {
            sink_.comparisons(1);
            if (s_[i] > s_[j]) break;
            i = s_[i] < s_[j] ? start_ : i + 1;
            ++j;
        }
        period_ = j - i;
        repeat_limit_ = i;
        pending_ = true;
    }

    std::span<const std::uint8_t> s_;
    StatsSink<Count> sink_;
    std::size_t start_ = 0;
    std::size_t period_ = 0;
    std::size_t repeat_limit_ = 0;
    bool pending_ = false;
};

/// All factor end positions at once.
std::vector<std::size_t> factor_ends(std::span<const std::uint8_t> s);

struct ExtendedRun {
    std::size_t period;
    /// 1-based start of the first full repetition inside the examined slice.
    std::size_t first_full_start;
    friend bool operator==(const ExtendedRun&, const ExtendedRun&) = default;
};

/// Runs Duval's rounds directly and stops as soon as the answer is fixed:
/// a period above n/2 means the longest factor is too long, and a run needs
/// a round that starts before n/2 and reaches the end of s. Factors after
/// that round are shorter than its period, so they are never scanned.
template <bool Count>
std::optional<ExtendedRun> detect_extended_run(std::span<const std::uint8_t> s, StatsSink<Count> sink) {
    const std::size_t n = s.size();
    if (n == 0) throw UsageError("extended run detection on an empty string");
    std::size_t longest = 0;
    std::size_t first = 0; // 0-based start of the first longest factor
    std::size_t start = 0;
    while (true) {
        if (2 * start + 2 > n) return std::nullopt;
        std::size_t i = start;
        std::size_t j = start + 1;
        while (j < n) {
            sink.comparisons(1);
            if (s[i] > s[j]) break;
            if (s[i] < s[j]) {
                if (2 * (j + 1 - start) > n) return std::nullopt;
                i = start;
            } else {
                ++i;
            }
            ++j;
        }
        const std::size_t period = j - i;
        // Equal-length factors keep the first occurrence.
        if (period > longest) {
            longest = period;
            first = start;
        }
        if (j == n) break;
        start += (i - start) / period * period + period;
    }

    if (2 * longest > n) return std::nullopt;
    // The last round showed s has its period from `start` on, so when that
    // round holds the longest factor only the prefix before it is unchecked.
    const std::size_t checked = first == start ? start : n - longest;
    const std::size_t agree = simd::kernels().mismatch(s.data(), s.data() + longest, checked);
    sink.comparisons(agree == checked ? agree : agree + 1);
    if (agree != checked) return std::nullopt;
    return ExtendedRun{longest, first + 1};
}

inline std::optional<ExtendedRun> detect_extended_run(std::span<const std::uint8_t> s) {
    return detect_extended_run(s, StatsSink<false>{});
}

} // namespace lyndon::duval
