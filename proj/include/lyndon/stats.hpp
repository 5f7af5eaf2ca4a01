#pragma once

#include <cstdint>
#include <ostream>

namespace lyndon {

/// Instrumentation counters filled in by the builders when requested.
struct BuildStats {
    std::uint64_t char_comparisons = 0;
    std::uint64_t indices_skipped_run = 0;
    std::uint64_t indices_skipped_lookahead = 0;
    std::uint64_t closes_written = 0;

    std::uint64_t indices_processed = 0;
    std::uint64_t run_extensions = 0;
    std::uint64_t lookahead_full_copies = 0;
    std::uint64_t lookahead_handoffs = 0;
    /// Handoffs whose next processed index triggered a run extension.
    std::uint64_t handoffs_resolved_by_run = 0;
    /// Largest LCE seen by a single pss search.
    std::uint64_t max_lce = 0;

    friend std::ostream& operator<<(std::ostream& os, const BuildStats& s) {
        return os << "char_comparisons=" << s.char_comparisons << " indices_processed=" << s.indices_processed
                  << " indices_skipped_run=" << s.indices_skipped_run
                  << " indices_skipped_lookahead=" << s.indices_skipped_lookahead
                  << " closes_written=" << s.closes_written << " run_extensions=" << s.run_extensions
                  << " lookahead_full_copies=" << s.lookahead_full_copies
                  << " lookahead_handoffs=" << s.lookahead_handoffs
                  << " handoffs_resolved_by_run=" << s.handoffs_resolved_by_run << " max_lce=" << s.max_lce;
    }
};

/// Counter hook threaded through the hot paths. The disabled specialisation is
/// empty, so instrumented code compiles away when nobody asked for stats.
template <bool Enabled>
class StatsSink;

template <>
class StatsSink<false> {
public:
    static constexpr bool enabled = false;
    explicit StatsSink(BuildStats* /*unused*/ = nullptr) noexcept {}
    void comparisons(std::uint64_t) noexcept {}
    void processed() noexcept {}
    void skipped_run(std::uint64_t) noexcept {}
    void skipped_lookahead(std::uint64_t) noexcept {}
    void closes(std::uint64_t) noexcept {}
    void run_extension() noexcept {}
    void lookahead_full() noexcept {}
    void lookahead_handoff() noexcept {}
    void handoff_resolved() noexcept {}
    void lce_seen(std::uint64_t) noexcept {}
};

template <>
class StatsSink<true> {
public:
    static constexpr bool enabled = true;
    explicit StatsSink(BuildStats* stats) noexcept : stats_(stats) {}
    void comparisons(std::uint64_t c) noexcept { stats_->char_comparisons += c; }
    void processed() noexcept { ++stats_->indices_processed; }
    void skipped_run(std::uint64_t c) noexcept { stats_->indices_skipped_run += c; }
    void skipped_lookahead(std::uint64_t c) noexcept { stats_->indices_skipped_lookahead += c; }
    void closes(std::uint64_t c) noexcept { stats_->closes_written += c; }
    void run_extension() noexcept { ++stats_->run_extensions; }
    void lookahead_full() noexcept { ++stats_->lookahead_full_copies; }
    void lookahead_handoff() noexcept { ++stats_->lookahead_handoffs; }
    void handoff_resolved() noexcept { ++stats_->handoffs_resolved_by_run; }
    void lce_seen(std::uint64_t l) noexcept {
        if (l > stats_->max_lce) stats_->max_lce = l;
    }

private:
    BuildStats* stats_;
};

} // namespace lyndon
