#include "lyndon/bps.hpp"

#include "lyndon/simd.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <string>
#include <utility>

namespace lyndon {

namespace {

struct ByteTables {
    std::array<std::int8_t, 256> excess{};
    // min over t in [1, 8] of the excess of the first t bits
    std::array<std::int8_t, 256> fwd_min{};
    // max over s in [0, 7] of the excess of the last s bits
    std::array<std::int8_t, 256> bwd_max{};
    // position (0-7) of the r-th set bit, r in [0, popcount)
    std::array<std::array<std::uint8_t, 8>, 256> select{};
};

constexpr ByteTables make_tables() {
    ByteTables t;
    for (int v = 0; v < 256; ++v) {
        int sum = 0;
        int lowest = 8;
        int r = 0;
        for (int b = 0; b < 8; ++b) {
            const bool open = ((v >> b) & 1) != 0;
            sum += open ? 1 : -1;
            lowest = std::min(lowest, sum);
            if (open) t.select[v][r++] = static_cast<std::uint8_t>(b);
        }
        t.excess[v] = static_cast<std::int8_t>(sum);
        t.fwd_min[v] = static_cast<std::int8_t>(lowest);
        int suffix = 0;
        int highest = 0;
        for (int b = 7; b >= 1; --b) {
            suffix += ((v >> b) & 1) != 0 ? 1 : -1;
            highest = std::max(highest, suffix);
        }
        t.bwd_max[v] = static_cast<std::int8_t>(highest);
    }
    return t;
}

constexpr ByteTables kTables = make_tables();

constexpr std::uint64_t low_mask(unsigned count) noexcept {
    return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

} // namespace

AppendOnlyBps::AppendOnlyBps(BpsConfig config) : config_(config) {
    if (config.select_sample_rate < kBlockBits || !std::has_single_bit(config.select_sample_rate)) {
        throw UsageError("select_sample_rate must be a power of two >= 512");
    }
    super_rank_.push_back(0);
    block_rank_.push_back(0);
    min_tree_.emplace_back();
}

void AppendOnlyBps::reserve(std::size_t bits) {
    // One spare zero word lets the append fast paths skip the growth check.
    if (words_.size() < (bits + 63) / 64 + 1) words_.resize((bits + 63) / 64 + 1, 0);
    const std::size_t blocks = bits / kBlockBits + 1;
    block_rank_.reserve(blocks);
    super_rank_.reserve(blocks / kBlocksPerSuper + 1);
    min_tree_[0].reserve(blocks);
    select_samples_.reserve(bits / 2 / config_.select_sample_rate + 1);
}

bool AppendOnlyBps::bit(std::size_t pos) const {
    if (pos == 0 || pos > written_) throw UsageError("bit position " + std::to_string(pos) + " out of range");
    return ((words_[(pos - 1) >> 6] >> ((pos - 1) & 63)) & 1) != 0;
}

void AppendOnlyBps::seal(std::size_t block) {
    const std::size_t base = block_rank(block);
    const std::uint64_t* w = words_.data() + block * (kBlockBits / 64);
    const std::size_t ones = simd::kernels().popcount(w, kBlockBits / 64);

    std::int64_t e = 2 * static_cast<std::int64_t>(base) - static_cast<std::int64_t>(block * kBlockBits);
    std::int64_t lowest = std::numeric_limits<std::int64_t>::max();
    for (std::size_t k = block * (kBlockBits / 8); k < (block + 1) * (kBlockBits / 8); ++k) {
        const std::uint8_t byte = byte_at(k);
        lowest = std::min(lowest, e + kTables.fwd_min[byte]);
        e += kTables.excess[byte];
    }

    const auto rate = config_.select_sample_rate;
    for (std::size_t k = (base / rate + (base % rate != 0)) * rate; k < base + ones; k += rate) {
        select_samples_.push_back(static_cast<std::uint32_t>(block));
    }

    const std::size_t next = block + 1;
    if (next % kBlocksPerSuper == 0) super_rank_.push_back(base + ones);
    block_rank_.push_back(static_cast<std::uint16_t>(base + ones - super_rank_[next / kBlocksPerSuper]));

    const auto v = static_cast<std::int32_t>(lowest);
    min_tree_[0].push_back(v);
    for (std::size_t level = 1; min_tree_[level - 1].size() > 1; ++level) {
        const auto& below = min_tree_[level - 1];
        if (level == min_tree_.size()) {
            std::vector<std::int32_t> fresh;
            for (std::size_t g = 0; g < below.size(); g += kTreeFanout) {
                const auto end = below.begin() + static_cast<std::ptrdiff_t>(std::min(below.size(), g + kTreeFanout));
                fresh.push_back(*std::min_element(below.begin() + static_cast<std::ptrdiff_t>(g), end));
            }
            min_tree_.push_back(std::move(fresh));
            continue;
        }
        auto& here = min_tree_[level];
        const std::size_t idx = (below.size() - 1) / kTreeFanout;
        if (idx == here.size()) {
            here.push_back(v);
        } else {
            here[idx] = std::min(here[idx], v);
        }
    }
}

std::uint64_t AppendOnlyBps::read_bits(std::size_t index, unsigned count) const {
    const std::size_t word = index >> 6;
    const unsigned offset = index & 63;
    std::uint64_t v = words_[word] >> offset;
    if (offset + count > 64) v |= words_[word + 1] << (64 - offset);
    return v & low_mask(count);
}

void AppendOnlyBps::append_bits(std::uint64_t bits, unsigned count) {
    if (count == 0) return;
    bits &= low_mask(count);
    const std::size_t word = written_ >> 6;
    const unsigned offset = written_ & 63;
    if (words_.size() <= ((written_ + count) >> 6)) words_.resize(((written_ + count) >> 6) + 1, 0);
    words_[word] |= bits << offset;
    if (offset + count > 64) words_[word + 1] |= bits >> (64 - offset);
    const std::size_t before = written_;
    written_ += count;
    opens_ += static_cast<std::size_t>(std::popcount(bits));
    if (before / kBlockBits != written_ / kBlockBits) seal(before / kBlockBits);
}

void AppendOnlyBps::append_closes_open_slow(std::size_t closes) {
    if (closes > unclosed()) throw UsageError("append_closes_open closes more than are open");
    if (closes >= kMaxBits - written_) throw UsageError("parentheses sequence length limit reached");
    for (; closes >= 64; closes -= 64) append_bits(0, 64);
    append_bits(std::uint64_t{1} << closes, static_cast<unsigned>(closes + 1));
}

std::int64_t AppendOnlyBps::min_relative_excess(std::size_t from, std::size_t to) const {
    std::int64_t e = 0;
    std::int64_t lowest = std::numeric_limits<std::int64_t>::max();
    std::size_t q = from;
    while (q <= to) {
        if (q + 7 <= to) {
            const auto byte = static_cast<std::uint8_t>(read_bits(q - 1, 8));
            lowest = std::min(lowest, e + kTables.fwd_min[byte]);
            e += kTables.excess[byte];
            q += 8;
            continue;
        }
        e += ((words_[(q - 1) >> 6] >> ((q - 1) & 63)) & 1) != 0 ? 1 : -1;
        lowest = std::min(lowest, e);
        ++q;
    }
    return lowest;
}

void AppendOnlyBps::copy_append(std::size_t from, std::size_t to, std::size_t repetitions) {
    if (from == 0 || from > to || to > written_) {
        throw UsageError("copy_append range [" + std::to_string(from) + ", " + std::to_string(to) +
                         "] outside [1, " + std::to_string(written_) + "]");
    }
    if (repetitions == 0) return;
    const std::size_t len = to - from + 1;
    if (repetitions > (kMaxBits - written_) / len) throw UsageError("copy_append exceeds the length limit");

    const std::int64_t delta = excess(to) - excess(from - 1);
    const std::int64_t lowest = min_relative_excess(from, to);
    const std::int64_t worst = delta >= 0 ? lowest : static_cast<std::int64_t>(repetitions - 1) * delta + lowest;
    if (static_cast<std::int64_t>(unclosed()) + worst < 0) {
        throw UsageError("copy_append would close more parentheses than are open");
    }

    if (len <= 32) {
        // Tile the period into one word and append whole tiles.
        const std::uint64_t period = read_bits(from - 1, static_cast<unsigned>(len));
        const std::size_t per_tile = 64 / len;
        std::uint64_t tile = 0;
        for (std::size_t x = 0; x < per_tile; ++x) tile |= period << (x * len);
        const auto tile_bits = static_cast<unsigned>(per_tile * len);
        std::size_t left = repetitions;
        for (; left >= per_tile; left -= per_tile) append_bits(tile, tile_bits);
        append_bits(tile, static_cast<unsigned>(left * len));
        return;
    }
    for (std::size_t r = 0; r < repetitions; ++r) {
        for (std::size_t x = from - 1; x < to; x += 64) {
            const auto count = static_cast<unsigned>(std::min<std::size_t>(64, to - x));
            append_bits(read_bits(x, count), count);
        }
    }
}

AppendOnlyBps AppendOnlyBps::from_packed(std::span<const std::uint64_t> words, std::size_t bits, BpsConfig config) {
    if (words.size() < (bits + 63) / 64) throw UsageError("from_packed: fewer words than bits");
    if (bits > kMaxBits) throw IntegrityError("parentheses sequence too long");
    AppendOnlyBps out(config);
    out.reserve(bits);
    std::int64_t e = 0;
    for (std::size_t x = 0; x < bits; x += 64) {
        const auto count = static_cast<unsigned>(std::min<std::size_t>(64, bits - x));
        const std::uint64_t w = words[x / 64] & low_mask(count);
        for (unsigned b = 0; b < count; b += 8) {
            const auto byte = static_cast<std::uint8_t>(w >> b);
            const unsigned valid = std::min(8u, count - b);
            if (valid == 8) {
                if (e + kTables.fwd_min[byte] < 0) throw IntegrityError("parentheses close below depth zero");
                e += kTables.excess[byte];
                continue;
            }
            for (unsigned t = 0; t < valid; ++t) {
                e += ((byte >> t) & 1) != 0 ? 1 : -1;
                if (e < 0) throw IntegrityError("parentheses close below depth zero");
            }
        }
        out.append_bits(w, count);
    }
    return out;
}

std::size_t AppendOnlyBps::rank_open(std::size_t pos) const {
    if (pos > written_) throw UsageError("rank_open position " + std::to_string(pos) + " beyond the sequence");
    const std::size_t block = pos / kBlockBits;
    std::size_t r = block_rank(block);
    const std::size_t last = pos >> 6;
    for (std::size_t w = block * (kBlockBits / 64); w < last; ++w) r += static_cast<std::size_t>(std::popcount(words_[w]));
    if ((pos & 63) != 0) r += static_cast<std::size_t>(std::popcount(words_[last] & low_mask(pos & 63)));
    return r;
}

std::int64_t AppendOnlyBps::excess(std::size_t q) const {
    return 2 * static_cast<std::int64_t>(rank_open(q)) - static_cast<std::int64_t>(q);
}

std::size_t AppendOnlyBps::select_open(std::size_t k) const {
    if (k == 0 || k > opens_) throw UsageError("select_open(" + std::to_string(k) + ") out of range");
    const std::size_t s = (k - 1) / config_.select_sample_rate;
    std::size_t lo = 0;
    if (!select_samples_.empty()) lo = select_samples_[std::min(s, select_samples_.size() - 1)];
    std::size_t hi = s + 1 < select_samples_.size() ? select_samples_[s + 1] : (written_ - 1) / kBlockBits;
    // last block in [lo, hi] whose starting rank is below k
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo + 1) / 2;
        if (block_rank(mid) < k) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    std::size_t remaining = k - block_rank(lo);
    std::size_t word = lo * (kBlockBits / 64);
    for (;; ++word) {
        const auto ones = static_cast<std::size_t>(std::popcount(words_[word]));
        if (remaining <= ones) break;
        remaining -= ones;
    }
    const std::uint64_t w = words_[word];
    for (unsigned b = 0;; b += 8) {
        const auto byte = static_cast<std::uint8_t>(w >> b);
        const auto ones = static_cast<std::size_t>(std::popcount(byte));
        if (remaining <= ones) return word * 64 + b + kTables.select[byte][remaining - 1] + 1;
        remaining -= ones;
    }
}

std::size_t AppendOnlyBps::open_to_node(std::size_t pos) const {
    if (!bit(pos)) throw UsageError("position " + std::to_string(pos) + " does not hold an opening parenthesis");
    return rank_open(pos) - 1;
}

std::size_t AppendOnlyBps::select_uncl(std::size_t k) const {
    if (k == 0 || k > unclosed()) throw UsageError("select_uncl(" + std::to_string(k) + ") out of range");
    return bwd_search(written_ + 1, static_cast<std::int64_t>(k) - 1) + 1;
}

std::size_t AppendOnlyBps::scan_bwd(std::size_t lo, std::size_t hi, std::int64_t e, std::int64_t d) const {
    std::size_t q = hi;
    while (q >= lo) {
        if ((q & 7) == 0 && q >= lo + 7) {
            const std::uint8_t byte = byte_at(q / 8 - 1);
            if (e - kTables.bwd_max[byte] > d) {
                e -= kTables.excess[byte];
                q -= 8;
                continue;
            }
        }
        if (e <= d) return q;
        e -= ((words_[(q - 1) >> 6] >> ((q - 1) & 63)) & 1) != 0 ? 1 : -1;
        --q;
    }
    return npos;
}

std::size_t AppendOnlyBps::scan_fwd(std::size_t lo, std::size_t hi, std::int64_t e, std::int64_t d) const {
    std::size_t q = lo;
    while (q <= hi) {
        if (((q - 1) & 7) == 0 && q + 7 <= hi) {
            const std::uint8_t byte = byte_at((q - 1) / 8);
            if (e + kTables.fwd_min[byte] > d) {
                e += kTables.excess[byte];
                q += 8;
                continue;
            }
        }
        e += ((words_[(q - 1) >> 6] >> ((q - 1) & 63)) & 1) != 0 ? 1 : -1;
        if (e <= d) return q;
        ++q;
    }
    return npos;
}

std::size_t AppendOnlyBps::tree_rightmost(std::size_t block, std::int64_t d) const {
    const auto& k = simd::kernels();
    const auto bound = static_cast<std::int32_t>(std::max<std::int64_t>(d, std::numeric_limits<std::int32_t>::min()));
    if (d >= std::numeric_limits<std::int32_t>::max()) return block == 0 ? npos : block - 1;
    std::size_t level = 0;
    std::size_t end = std::min(block, min_tree_[0].size());
    std::size_t found = npos;
    while (true) {
        const std::size_t start = end == 0 ? 0 : (end - 1) / kTreeFanout * kTreeFanout;
        const std::size_t r = k.rightmost_at_most(min_tree_[level].data() + start, end - start, bound);
        if (r != simd::kNotFound) {
            found = start + r;
            break;
        }
        if (start == 0) return npos;
        end = start / kTreeFanout;
        ++level;
    }
    for (; level > 0; --level) {
        const auto& below = min_tree_[level - 1];
        const std::size_t start = found * kTreeFanout;
        const std::size_t count = std::min(below.size(), start + kTreeFanout) - start;
        found = start + k.rightmost_at_most(below.data() + start, count, bound);
    }
    return found;
}

std::size_t AppendOnlyBps::tree_leftmost(std::size_t block, std::int64_t d) const {
    const auto& k = simd::kernels();
    if (d < std::numeric_limits<std::int32_t>::min()) return npos;
    const auto bound = static_cast<std::int32_t>(std::min<std::int64_t>(d, std::numeric_limits<std::int32_t>::max()));
    std::size_t level = 0;
    std::size_t start = block + 1;
    std::size_t found = npos;
    while (true) {
        const auto& here = min_tree_[level];
        if (start >= here.size()) return npos;
        const std::size_t end = std::min(here.size(), start / kTreeFanout * kTreeFanout + kTreeFanout);
        const std::size_t r = k.leftmost_at_most(here.data() + start, end - start, bound);
        if (r != simd::kNotFound) {
            found = start + r;
            break;
        }
        if (level + 1 == min_tree_.size()) return npos;
        start = start / kTreeFanout + 1;
        ++level;
    }
    for (; level > 0; --level) {
        const auto& below = min_tree_[level - 1];
        const std::size_t first = found * kTreeFanout;
        const std::size_t count = std::min(below.size(), first + kTreeFanout) - first;
        found = first + k.leftmost_at_most(below.data() + first, count, bound);
    }
    return found;
}

std::size_t AppendOnlyBps::bwd_search(std::size_t before, std::int64_t d) const {
    if (before == 0) return npos;
    if (before > written_ + 1) throw UsageError("bwd_search start beyond the sequence");
    if (before == 1) return d >= 0 ? 0 : npos;
    return bwd_search(before, d, excess(before - 1));
}

std::size_t AppendOnlyBps::bwd_search(std::size_t before, std::int64_t d, std::int64_t e_before) const {
    if (before == 0) return npos;
    if (before > written_ + 1) throw UsageError("bwd_search start beyond the sequence");
    const std::size_t hi = before - 1;
    if (hi == 0) return d >= 0 ? 0 : npos;
    const std::size_t block = (hi - 1) / kBlockBits;
    const std::size_t r = scan_bwd(block * kBlockBits + 1, hi, e_before, d);
    if (r != npos) return r;
    const std::size_t b = tree_rightmost(block, d);
    if (b != npos) {
        const std::size_t end = (b + 1) * kBlockBits;
        const std::int64_t e = 2 * static_cast<std::int64_t>(block_rank(b + 1)) - static_cast<std::int64_t>(end);
        return scan_bwd(b * kBlockBits + 1, end, e, d);
    }
    return d >= 0 ? 0 : npos;
}

std::size_t AppendOnlyBps::fwd_search(std::size_t after, std::int64_t d) const {
    if (after >= written_) return npos;
    const std::size_t lo = after + 1;
    const std::size_t block = (lo - 1) / kBlockBits;
    const std::size_t r = scan_fwd(lo, std::min((block + 1) * kBlockBits, written_), excess(after), d);
    if (r != npos) return r;
    const std::size_t b = tree_leftmost(block, d);
    if (b != npos) {
        const std::size_t start = b * kBlockBits;
        const std::int64_t e = 2 * static_cast<std::int64_t>(block_rank(b)) - static_cast<std::int64_t>(start);
        return scan_fwd(start + 1, start + kBlockBits, e, d);
    }
    const std::size_t sealed = written_ / kBlockBits;
    if (written_ % kBlockBits != 0 && sealed > block) {
        const std::size_t start = sealed * kBlockBits;
        const std::int64_t e = 2 * static_cast<std::int64_t>(block_rank(sealed)) - static_cast<std::int64_t>(start);
        return scan_fwd(start + 1, written_, e, d);
    }
    return npos;
}

std::size_t AppendOnlyBps::support_bits() const noexcept {
    std::size_t bits = super_rank_.size() * 64 + block_rank_.size() * 16 + select_samples_.size() * 32;
    for (const auto& level : min_tree_) bits += level.size() * 32;
    return bits;
}

std::string AppendOnlyBps::to_parens() const {
    std::string s(written_, ')');
    for (std::size_t x = 0; x < written_; ++x) {
        if (((words_[x >> 6] >> (x & 63)) & 1) != 0) s[x] = '(';
    }
    return s;
}

SuccinctPssTree AppendOnlyBps::finalize() && { return SuccinctPssTree(std::move(*this)); }

SuccinctPssTree AppendOnlyBps::finalize() const& { return SuccinctPssTree(*this); }

SuccinctPssTree::SuccinctPssTree(AppendOnlyBps bits) : bits_(std::move(bits)), n_(0) {
    const std::size_t len = bits_.size();
    if (len < 2 || len % 2 != 0 || bits_.open_count() * 2 != len) {
        throw IntegrityError("parentheses sequence of " + std::to_string(len) + " bits with " +
                             std::to_string(bits_.open_count()) + " opens is not balanced");
    }
    // A single tree: the first open is matched by the last close.
    if (!bits_.bit(1) || bits_.fwd_search(1, 0) != len) {
        throw IntegrityError("parentheses sequence is not a single tree");
    }
    n_ = len / 2 - 1;
}

SuccinctPssTree SuccinctPssTree::from_packed(std::span<const std::uint64_t> words, std::size_t n, BpsConfig config) {
    if (n > AppendOnlyBps::kMaxBits / 2 - 1) throw IntegrityError("tree too large");
    return SuccinctPssTree(AppendOnlyBps::from_packed(words, 2 * n + 2, config));
}

std::size_t SuccinctPssTree::check_text_position(std::size_t i) const {
    if (i == 0 || i > n_) {
        throw UsageError("text position " + std::to_string(i) + " outside [1, " + std::to_string(n_) + "]");
    }
    return i;
}

std::size_t SuccinctPssTree::find_close(std::size_t open_pos) const {
    if (!bits_.bit(open_pos)) throw UsageError("find_close on a closing parenthesis");
    return bits_.fwd_search(open_pos, bits_.excess(open_pos) - 1);
}

std::size_t SuccinctPssTree::enclose(std::size_t open_pos) const {
    if (!bits_.bit(open_pos)) throw UsageError("enclose on a closing parenthesis");
    if (open_pos == 1) throw UsageError("the root has no enclosing pair");
    return bits_.bwd_search(open_pos, bits_.excess(open_pos) - 2) + 1;
}

std::size_t SuccinctPssTree::parent(std::size_t node) const {
    if (node == 0) throw UsageError("the root has no parent");
    if (node > n_) throw UsageError("node " + std::to_string(node) + " outside [0, " + std::to_string(n_) + "]");
    return bits_.rank_open(enclose(bits_.node_to_open(node))) - 1;
}

std::size_t SuccinctPssTree::subtree_size(std::size_t node) const {
    if (node > n_) throw UsageError("node " + std::to_string(node) + " outside [0, " + std::to_string(n_) + "]");
    const std::size_t open = bits_.node_to_open(node);
    return (find_close(open) - open + 1) / 2;
}

} // namespace lyndon
