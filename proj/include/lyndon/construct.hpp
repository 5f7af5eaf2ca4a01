#pragma once

// Linear-time construction of the PSS tree parentheses (succinct mode) and of
// the Lyndon array in place (plain mode).

#include "lyndon/bps.hpp"
#include "lyndon/stats.hpp"
#include "lyndon/text.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace lyndon {

/// The rightmost path P_{i-1} = {p_1 = i-1 > p_2 > ... > p_k = 0} held
/// explicitly. The builders never materialise it; this form exists so the
/// search can be exercised on its own.
struct RightmostPath {
    std::vector<std::size_t> nodes; // nodes[x - 1] = p_x
};

struct PssSearchResult {
    /// Rank on the path with p_m = pss(i).
    std::size_t m;
    /// p_m or p_{m-1}, whichever shares the longer prefix with S_i (p_{m-1} on ties).
    std::size_t j;
    std::size_t ell;
    std::size_t pss;
    friend bool operator==(const PssSearchResult&, const PssSearchResult&) = default;
};

struct LceProbe {
    std::size_t rank;
    std::size_t node;
    std::size_t lce;
};

/// Finds the attachment point of i on the given path. Every lce evaluated is
/// appended to trace when it is non-null.
PssSearchResult find_pss(const Text& text, const RightmostPath& path, std::size_t i, BuildStats* stats = nullptr,
                         std::vector<LceProbe>* trace = nullptr);

enum class RunDirection { Increasing, Decreasing };

struct RunGeometry {
    std::size_t mu_len;
    std::size_t t;
    std::size_t first; // r_1 = j
    RunDirection direction;

    std::size_t rep(std::size_t x) const noexcept { return first + (x - 1) * mu_len; }
    std::size_t last() const noexcept { return rep(t); }
};

/// Geometry of the run found after processing i with result r; requires
/// r.ell >= 2 (i - r.j).
RunGeometry run_geometry(std::size_t i, const PssSearchResult& r);

struct LookaheadOutcome {
    enum class Kind { FullCopy, RunHandoff };
    Kind kind;
    /// Nodes i+1 .. i+length-1 are copied; processing resumes at i + length.
    std::size_t length;
    /// RunHandoff only: first repetition start of the run, in [i, i + length).
    std::size_t h;
    std::size_t period;
};

/// Decides how far the look-ahead after i may copy, given j and ell with
/// ell < 2 (i - j) and ell / 4 >= 2.
LookaheadOutcome plan_lookahead(const Text& text, std::size_t i, std::size_t j, std::size_t ell,
                                BuildStats* stats = nullptr);

/// The 2n+2 parentheses of the PSS tree of text.
AppendOnlyBps build_succinct(const Text& text, BuildStats* stats = nullptr);

/// Lyndon array in 32-bit entries when n < 2^31 and 64-bit entries otherwise.
using LyndonArray = std::variant<std::vector<std::uint32_t>, std::vector<std::uint64_t>>;

LyndonArray build_plain(const Text& text, BuildStats* stats = nullptr);

/// Fills out[i - 1] = lambda[i]; out.size() must equal text.size() and Index
/// must represent n + 1. No other storage proportional to n is used.
template <typename Index>
void build_plain_into(const Text& text, std::span<Index> out, BuildStats* stats = nullptr);

extern template void build_plain_into<std::uint32_t>(const Text&, std::span<std::uint32_t>, BuildStats*);
extern template void build_plain_into<std::uint64_t>(const Text&, std::span<std::uint64_t>, BuildStats*);

std::vector<std::uint64_t> widen(const LyndonArray& lambda);
std::size_t size_of(const LyndonArray& lambda) noexcept;

} // namespace lyndon
