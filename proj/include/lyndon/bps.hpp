#pragma once

// Balanced parentheses sequences (open = 1, close = 0) that grow by appending,
// with rank/select and excess searches kept current after every append.
//
// Positions are 1-based bit indices. E(q) = #open - #close over bits [1, q] is
// the excess, E(0) = 0. Every query here reduces to rank or to the nearest
// q before/after a point with E(q) <= d, answered by in-block byte tables and a
// 64-ary min tree over the per-block minimum excess.

#include "lyndon/error.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lyndon {

struct BpsConfig {
    /// One select sample per this many opening parentheses; a power of two
    /// >= 512. Larger values shrink the samples and lengthen the binary search.
    std::uint32_t select_sample_rate = 4096;
};

class SuccinctPssTree;

class AppendOnlyBps {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    static constexpr std::size_t kBlockBits = 512;
    static constexpr std::size_t kBlocksPerSuper = 64;
    static constexpr std::size_t kTreeFanout = 64;
    /// Excess is tracked in 32-bit block minima.
    static constexpr std::size_t kMaxBits = (std::size_t{1} << 31) - 1;

    explicit AppendOnlyBps(BpsConfig config = {});

    /// Reserve storage for a sequence of the given final length.
    void reserve(std::size_t bits);

    void append_open() {
        if (written_ == kMaxBits) throw UsageError("parentheses sequence length limit reached");
        push_bit(true);
    }

    void append_close() {
        if (unclosed() == 0) throw UsageError("append_close with no unclosed parenthesis");
        push_bit(false);
    }

    /// Appends `closes` closing parentheses followed by one open.
    void append_closes_open(std::size_t closes) {
        const std::size_t end = written_ + closes + 1;
        if (closes >= 63 || closes > unclosed() || end > kMaxBits || (end >> 6) >= words_.size()) {
            append_closes_open_slow(closes);
            return;
        }
        put_closes_open(closes);
    }

    /// Same, for callers that reserved room for the final length and know
    /// closes <= unclosed().
    void append_closes_open_reserved(std::size_t closes) {
        if (closes >= 63) {
            append_closes_open_slow(closes);
            return;
        }
        put_closes_open(closes);
    }

    /// Appends bits [from, to] `repetitions` times.
    void copy_append(std::size_t from, std::size_t to, std::size_t repetitions);

    /// Builds a sequence from LSB-first packed words; throws IntegrityError if
    /// some prefix closes more than it opens.
    static AppendOnlyBps from_packed(std::span<const std::uint64_t> words, std::size_t bits, BpsConfig config = {});

    std::size_t size() const noexcept { return written_; }
    std::size_t open_count() const noexcept { return opens_; }
    std::size_t unclosed() const noexcept { return 2 * opens_ - written_; }
    bool bit(std::size_t pos) const;
    std::span<const std::uint64_t> words() const noexcept { return {words_.data(), (written_ + 63) / 64}; }

    /// Opens among bits [1, pos].
    std::size_t rank_open(std::size_t pos) const;
    /// Position of the k-th open, k in [1, open_count()].
    std::size_t select_open(std::size_t k) const;
    /// Opening position of the node with preorder number i.
    std::size_t node_to_open(std::size_t node) const { return select_open(node + 1); }
    std::size_t open_to_node(std::size_t pos) const;
    /// Position of the k-th unclosed open counted from the left, k in [1, unclosed()].
    std::size_t select_uncl(std::size_t k) const;

    std::int64_t excess(std::size_t q) const;
    /// Largest q < before with E(q) <= d, or npos.
    std::size_t bwd_search(std::size_t before, std::int64_t d) const;
    /// As above with E(before - 1) supplied by the caller, saving a rank.
    std::size_t bwd_search(std::size_t before, std::int64_t d, std::int64_t e_before) const;
    /// Smallest q > after with E(q) <= d, or npos.
    std::size_t fwd_search(std::size_t after, std::int64_t d) const;

    /// Bits used by rank/select/min structures, excluding the payload.
    std::size_t support_bits() const noexcept;
    std::string to_parens() const;

    SuccinctPssTree finalize() &&;
    SuccinctPssTree finalize() const&;

private:
    void push_bit(bool open) {
        const std::size_t word = written_ >> 6;
        if (word == words_.size()) words_.push_back(0);
        words_[word] |= static_cast<std::uint64_t>(open) << (written_ & 63);
        ++written_;
        opens_ += open;
        if ((written_ & (kBlockBits - 1)) == 0) seal(written_ / kBlockBits - 1);
    }

    void put_closes_open(std::size_t closes) {
        const std::size_t end = written_ + closes + 1;
        const std::size_t pos = end - 1;
        words_[pos >> 6] |= std::uint64_t{1} << (pos & 63);
        const std::size_t before = written_;
        written_ = end;
        ++opens_;
        if (before / kBlockBits != end / kBlockBits) seal(before / kBlockBits);
    }

    void append_bits(std::uint64_t bits, unsigned count);
    void append_closes_open_slow(std::size_t closes);
    std::uint64_t read_bits(std::size_t index, unsigned count) const;
    std::uint8_t byte_at(std::size_t k) const noexcept {
        return static_cast<std::uint8_t>(words_[k >> 3] >> ((k & 7) * 8));
    }
    void seal(std::size_t block);
    std::size_t block_rank(std::size_t block) const noexcept {
        return super_rank_[block / kBlocksPerSuper] + block_rank_[block];
    }
    std::int64_t min_relative_excess(std::size_t from, std::size_t to) const;

    std::size_t scan_bwd(std::size_t lo, std::size_t hi, std::int64_t e, std::int64_t d) const;
    std::size_t scan_fwd(std::size_t lo, std::size_t hi, std::int64_t e, std::int64_t d) const;
    std::size_t tree_rightmost(std::size_t block, std::int64_t d) const;
    std::size_t tree_leftmost(std::size_t block, std::int64_t d) const;

    BpsConfig config_;
    std::vector<std::uint64_t> words_;
    std::size_t written_ = 0;
    std::size_t opens_ = 0;

    // Entry b exists for every block that has started.
    std::vector<std::uint64_t> super_rank_;
    std::vector<std::uint16_t> block_rank_;
    // min_tree_[0][b] is the minimum of E over block b (sealed blocks only);
    // each higher level holds minima of 64 consecutive entries below it.
    std::vector<std::vector<std::int32_t>> min_tree_;
    // Block containing open number s * rate + 1.
    std::vector<std::uint32_t> select_samples_;
};

/// A complete, balanced sequence read as the PSS tree on nodes 0..n.
class SuccinctPssTree {
public:
    explicit SuccinctPssTree(AppendOnlyBps bits);

    /// Reads an LSB-first packed sequence of 2n+2 bits; IntegrityError if it is
    /// not a single balanced tree.
    static SuccinctPssTree from_packed(std::span<const std::uint64_t> words, std::size_t n, BpsConfig config = {});

    std::size_t n() const noexcept { return n_; }
    const AppendOnlyBps& bps() const noexcept { return bits_; }

    std::size_t find_close(std::size_t open_pos) const;
    /// Open of the tightest pair strictly enclosing the one opened at open_pos.
    std::size_t enclose(std::size_t open_pos) const;

    std::size_t parent(std::size_t node) const;
    std::size_t subtree_size(std::size_t node) const;
    std::size_t lambda(std::size_t i) const { return subtree_size(check_text_position(i)); }
    std::size_t nss(std::size_t i) const { return i + lambda(i); }
    std::size_t pss(std::size_t i) const { return parent(check_text_position(i)); }

private:
    std::size_t check_text_position(std::size_t i) const;

    AppendOnlyBps bits_;
    std::size_t n_;
};

} // namespace lyndon
