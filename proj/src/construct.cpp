#include "lyndon/construct.hpp"

#include "lyndon/duval.hpp"
#include "lyndon/error.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

namespace lyndon {

namespace {

// ---------------------------------------------------------------------------
// Path access policies for the search. A cursor names p_rank; `link` is only
// used by the in-place policy.

struct Cursor {
    std::size_t rank;
    std::size_t node;
    std::size_t link;
};

class ExplicitPathAccess {
public:
    explicit ExplicitPathAccess(const RightmostPath& path) : nodes_(path.nodes) {}
    Cursor first() const { return {1, nodes_[0], 0}; }
    void jump(Cursor& c, std::size_t steps) const {
        c.rank = std::min(c.rank + steps, nodes_.size());
        c.node = nodes_[c.rank - 1];
    }
    void begin_bracket(Cursor&, Cursor&) {}
    Cursor step_up(const Cursor& u) const { return {u.rank + 1, nodes_[u.rank], 0}; }
    Cursor step_down(const Cursor& w) const { return {w.rank - 1, nodes_[w.rank - 2], 0}; }
    void end_bracket() {}

private:
    const std::vector<std::size_t>& nodes_;
};

// The path read off the parentheses written so far. The topmost entries are
// cached in a fixed ring together with their opening positions; the next one
// down is the nearest unclosed open to the left, found by one backward search.
class SuccinctPathAccess {
public:
    explicit SuccinctPathAccess(const AppendOnlyBps& bps) : bps_(bps) {}

    Cursor first() const { return {1, ring_[top_ & kMask].node, 0}; }
    void jump(Cursor& c, std::size_t steps) {
        c.rank = std::min(c.rank + steps, depth_);
        c.node = node(c.rank);
    }
    void begin_bracket(Cursor&, Cursor&) {}
    Cursor step_up(const Cursor& u) { return {u.rank + 1, node(u.rank + 1), 0}; }
    Cursor step_down(const Cursor& w) { return {w.rank - 1, node(w.rank - 1), 0}; }
    void end_bracket() {}

    std::size_t node(std::size_t x) {
        if (x <= top_ - low_) return ring_[(top_ - x + 1) & kMask].node;
        return extend(x);
    }

    /// Nodes p_1..p_closes leave the path and v, whose open is at pos, joins it.
    void replace_top(std::size_t closes, std::size_t v, std::size_t pos) {
        top_ -= closes;
        low_ = std::min(low_, top_);
        depth_ -= closes;
        push(v, pos);
    }
    void push(std::size_t v, std::size_t pos) {
        ring_[++top_ & kMask] = {v, pos};
        if (top_ - low_ > kRing) low_ = top_ - kRing;
        ++depth_;
    }
    /// Forget everything below the top after a copy; depth is the new path length.
    void reset(std::size_t top_node, std::size_t depth) {
        low_ = top_;
        push(top_node, bps_.size());
        depth_ = depth;
    }
    void set_depth(std::size_t depth) { depth_ = depth; }

private:
    static constexpr std::size_t kRing = 256;
    static constexpr std::size_t kMask = kRing - 1;

    struct Entry {
        std::size_t node;
        std::size_t pos;
    };

    // The entry below the deepest cached one is the nearest unclosed open to
    // its left; beyond the ring, fall back to select.
    [[gnu::noinline]] std::size_t extend(std::size_t x) {
        std::size_t cached = top_ - low_;
        if (cached == 0 || x > kRing) {
            const std::size_t pos = bps_.select_uncl(depth_ - x + 1);
            return bps_.rank_open(pos) - 1;
        }
        const auto k = static_cast<std::int64_t>(depth_);
        for (; cached < x; ++cached) {
            const Entry& below = ring_[(top_ - cached + 1) & kMask];
            // E(below.pos) = k - cached + 1
            const auto c = static_cast<std::int64_t>(cached);
            const std::size_t open = bps_.bwd_search(below.pos, k - c - 1, k - c) + 1;
            ring_[(top_ - cached) & kMask] = {below.node - (below.pos - open + 1) / 2, open};
        }
        low_ = top_ - cached;
        return ring_[(top_ - x + 1) & kMask].node;
    }

    const AppendOnlyBps& bps_;
    std::array<Entry, kRing> ring_{};
    // Ranks 1..top_ - low_ are cached; rank x sits at slot top_ - x + 1.
    std::size_t top_ = 0;
    std::size_t low_ = 0;
    std::size_t depth_ = 0;
};

// Node x of the plain-mode array A, stored at out[x - 1]. Path nodes hold their
// pss; closed nodes hold their lambda.
template <typename Index>
class ArrayView {
public:
    explicit ArrayView(std::span<Index> out) : data_(out.data()) {}
    std::size_t get(std::size_t x) const noexcept { return data_[x - 1]; }
    void set(std::size_t x, std::size_t v) noexcept { data_[x - 1] = static_cast<Index>(v); }

private:
    Index* data_;
};

// Walks the pss pointers kept in A. During the second search step the nodes
// strictly inside the bracket (u, w] hold p_{x-1} xor p_{x+1} so the bracket can
// be walked from both ends; end_bracket restores the plain pointers.
template <typename Index>
class PlainPathAccess {
public:
    PlainPathAccess(ArrayView<Index> a, std::size_t i) : a_(a), i_(i) {}

    Cursor first() const { return {1, i_ - 1, 0}; }
    void jump(Cursor& c, std::size_t steps) const {
        for (; steps > 0 && c.node != 0; --steps) {
            c.node = a_.get(c.node);
            ++c.rank;
        }
    }
    void begin_bracket(Cursor& u, Cursor& w) {
        u0_ = u.node;
        w0_ = w.node;
        std::size_t prev = u.node;
        std::size_t cur = a_.get(prev);
        u.link = cur;
        while (cur != w.node) {
            const std::size_t next = a_.get(cur);
            a_.set(cur, prev ^ next);
            prev = cur;
            cur = next;
        }
        w.link = prev;
    }
    Cursor step_up(const Cursor& u) const { return {u.rank + 1, u.link, a_.get(u.link) ^ u.node}; }
    Cursor step_down(const Cursor& w) const { return {w.rank - 1, w.link, a_.get(w.link) ^ w.node}; }
    void end_bracket() {
        std::size_t prev = u0_;
        std::size_t cur = a_.get(u0_);
        while (cur != w0_) {
            const std::size_t next = a_.get(cur) ^ prev;
            a_.set(cur, next);
            prev = cur;
            cur = next;
        }
    }

private:
    ArrayView<Index> a_;
    std::size_t i_;
    std::size_t u0_ = 0;
    std::size_t w0_ = 0;
};

// ---------------------------------------------------------------------------

template <typename Path, bool Count>
PssSearchResult search(const Text& text, Path& path, std::size_t i, StatsSink<Count>& sink,
                       std::vector<LceProbe>* trace) {
    auto probe = [&](const Cursor& c, std::size_t skip) {
        const std::size_t l = detail::lce_unchecked(text, c.node, i, skip, sink);
        if (trace != nullptr) trace->push_back({c.rank, c.node, l});
        return l;
    };
    auto below = [&](const Cursor& c, std::size_t l) { return detail::suffix_less(text, c.node, i, l); };

    // Step 1: grow a candidate interval (u, w] with S_{p_u} > S_i > S_{p_w}.
    Cursor u = path.first();
    std::size_t lu = probe(u, 0);
    if (below(u, lu)) return {1, u.node, lu, u.node};
    Cursor w = u;
    std::size_t lw = 0;
    while (true) {
        w = u;
        path.jump(w, lu + 1);
        lw = probe(w, 0);
        if (below(w, lw)) break;
        u = w;
        lu = lw;
    }

    // Step 2: shrink from the side with the smaller lce; the first lu (or lw)
    // symbols are known to match.
    if (w.rank > u.rank + 1) {
        path.begin_bracket(u, w);
        while (w.rank > u.rank + 1) {
            Cursor c = lu < lw ? path.step_up(u) : path.step_down(w);
            const std::size_t lc = probe(c, lu < lw ? lu : lw);
            if (below(c, lc)) {
                w = c;
                lw = lc;
            } else {
                u = c;
                lu = lc;
            }
        }
        path.end_bracket();
    }
    if (lu >= lw) return {w.rank, u.node, lu, w.node};
    return {w.rank, w.node, lw, w.node};
}

template <bool Count>
LookaheadOutcome plan(const Text& text, std::size_t i, std::size_t j, std::size_t ell, StatsSink<Count>& sink) {
    const std::size_t len = ell / 4;
    const auto run = duval::detect_extended_run(text.slice(j + len, ell - len), sink);
    if (!run) return {LookaheadOutcome::Kind::FullCopy, len, 0, 0};
    const std::size_t p = run->period;
    const std::size_t first_full = j + len + run->first_full_start - 1;
    // Extend the period to the left, at most back to j.
    std::size_t q = j + len;
    while (q > j) {
        sink.comparisons(1);
        if (text[q - 1] != text[q - 1 + p]) break;
        --q;
    }
    const std::size_t h = (q - j) + (first_full - q) % p;
    if (h + p >= len) return {LookaheadOutcome::Kind::FullCopy, len, 0, 0};
    return {LookaheadOutcome::Kind::RunHandoff, h + p, i + h, p};
}

// ---------------------------------------------------------------------------
// The main loop shared by both modes. Mode supplies the search and the three
// ways of emitting structure: attach one node, replicate a run, copy a block.

template <typename Mode, bool Count>
void drive(const Text& text, Mode& mode, StatsSink<Count> sink) {
    const std::size_t n = text.size();
    bool after_handoff = false;
    std::size_t i = 1;
    while (i <= n) {
        sink.processed();
        const PssSearchResult r = mode.search(i, sink);
        mode.attach(i, r);
        sink.closes(r.m - 1);
        sink.lce_seen(r.ell);

        if (r.ell >= 2 * (i - r.j)) {
            if (after_handoff) sink.handoff_resolved();
            after_handoff = false;
            const RunGeometry g = run_geometry(i, r);
            sink.run_extension();
            sink.closes(mode.replicate_run(i, g));
            sink.skipped_run(g.last() - i);
            i = g.last() + 1;
            continue;
        }
        after_handoff = false;
        if (r.ell / 4 >= 2) {
            const LookaheadOutcome look = plan(text, i, r.j, r.ell, sink);
            if (look.kind == LookaheadOutcome::Kind::FullCopy) {
                sink.lookahead_full();
            } else {
                sink.lookahead_handoff();
                after_handoff = true;
            }
            if (look.length >= 2) sink.closes(mode.copy_block(i, r.j, look.length));
            sink.skipped_lookahead(look.length - 1);
            i += look.length;
            continue;
        }
        ++i;
    }
    sink.closes(mode.close_path());
}

class SuccinctMode {
public:
    explicit SuccinctMode(const Text& text) : text_(text), path_(bps_) {
        bps_.reserve(2 * text.size() + 2);
        bps_.append_open();
        path_.reset(0, 1);
    }

    template <bool Count>
    PssSearchResult search(std::size_t i, StatsSink<Count>& sink) {
        return lyndon::search(text_, path_, i, sink, nullptr);
    }

    void attach(std::size_t i, const PssSearchResult& r) {
        bps_.append_closes_open_reserved(r.m - 1);
        path_.replace_top(r.m - 1, i, bps_.size());
    }

    std::size_t replicate_run(std::size_t /*i*/, const RunGeometry& g) {
        const std::size_t before = bps_.size();
        const std::size_t from = bps_.node_to_open(g.first) + 1;
        bps_.copy_append(from, before, g.t - 2);
        // Every copy ends with the open of the next repetition start. Increasing
        // starts nest, so each stays on the path; decreasing ones are siblings.
        if (g.direction == RunDirection::Increasing) {
            const std::size_t len = before - from + 1;
            const std::size_t keep = std::min<std::size_t>(g.t - 2, 256);
            for (std::size_t x = g.t - keep + 1; x <= g.t; ++x) path_.push(g.rep(x), before + (x - 2) * len);
            path_.set_depth(bps_.unclosed());
        } else {
            path_.replace_top(1, g.last(), bps_.size());
        }
        return (g.t - 2) * (g.direction == RunDirection::Increasing ? g.mu_len - 1 : g.mu_len);
    }

    std::size_t copy_block(std::size_t i, std::size_t j, std::size_t len) {
        const std::size_t from = bps_.node_to_open(j) + 1;
        const std::size_t to = bps_.node_to_open(j + len - 1);
        bps_.copy_append(from, to, 1);
        path_.reset(i + len - 1, bps_.unclosed());
        return (to - from + 1) - (len - 1);
    }

    std::size_t close_path() {
        const std::size_t k = bps_.unclosed();
        for (std::size_t x = 0; x < k; ++x) bps_.append_close();
        return k;
    }

    AppendOnlyBps take() && { return std::move(bps_); }

private:
    const Text& text_;
    AppendOnlyBps bps_;
    SuccinctPathAccess path_;
};

template <typename Index>
class PlainMode {
public:
    PlainMode(const Text& text, std::span<Index> out) : text_(text), a_(out) {}

    template <bool Count>
    PssSearchResult search(std::size_t i, StatsSink<Count>& sink) {
        PlainPathAccess<Index> path(a_, i);
        return lyndon::search(text_, path, i, sink, nullptr);
    }

    void attach(std::size_t i, const PssSearchResult& r) {
        std::size_t node = i - 1;
        for (std::size_t x = 1; x < r.m; ++x) {
            const std::size_t next = a_.get(node);
            a_.set(node, i - node);
            node = next;
        }
        a_.set(i, node);
    }

    std::size_t replicate_run(std::size_t i, const RunGeometry& g) {
        const std::size_t j = g.first;
        const std::size_t p = g.mu_len;
        if (g.direction == RunDirection::Increasing) {
            // Each repetition start hangs below the previous one.
            for (std::size_t x = 3; x <= g.t; ++x) {
                const std::size_t base = g.rep(x - 1);
                for (std::size_t d = 1; d < p; ++d) a_.set(base + d, a_.get(j + d));
                a_.set(base + p, base);
            }
            return (g.t - 2) * (p - 1);
        }
        // Repetition starts are siblings; all but the last close after one period.
        const std::size_t parent = a_.get(i);
        for (std::size_t x = 2; x < g.t; ++x) {
            const std::size_t base = g.rep(x);
            a_.set(base, p);
            for (std::size_t d = 1; d < p; ++d) a_.set(base + d, a_.get(j + d));
        }
        a_.set(g.last(), parent);
        return (g.t - 2) * p;
    }

    std::size_t copy_block(std::size_t i, std::size_t j, std::size_t len) {
        // Nodes whose lambda overruns the copied block are still open at its
        // end; they form a chain below i.
        const std::size_t end = j + len - 1;
        std::size_t spine = i;
        std::size_t closed = 0;
        for (std::size_t d = 1; d < len; ++d) {
            const std::size_t v = a_.get(j + d);
            if (j + d + v > end) {
                a_.set(i + d, spine);
                spine = i + d;
            } else {
                a_.set(i + d, v);
                ++closed;
            }
        }
        return closed;
    }

    std::size_t close_path() {
        const std::size_t n = text_.size();
        std::size_t closes = 1; // the root
        for (std::size_t node = n; node != 0; ++closes) {
            const std::size_t next = a_.get(node);
            a_.set(node, n - node + 1);
            node = next;
        }
        return closes;
    }

private:
    const Text& text_;
    ArrayView<Index> a_;
};

} // namespace

PssSearchResult find_pss(const Text& text, const RightmostPath& path, std::size_t i, BuildStats* stats,
                         std::vector<LceProbe>* trace) {
    if (i == 0 || i > text.size()) throw UsageError("find_pss position " + std::to_string(i) + " outside the text");
    if (path.nodes.empty() || path.nodes.front() != i - 1 || path.nodes.back() != 0) {
        throw UsageError("rightmost path must run from i-1 down to 0");
    }
    ExplicitPathAccess access(path);
    if (stats != nullptr) {
        StatsSink<true> sink(stats);
        return search(text, access, i, sink, trace);
    }
    StatsSink<false> sink;
    return search(text, access, i, sink, trace);
}

RunGeometry run_geometry(std::size_t i, const PssSearchResult& r) {
    if (r.j >= i || r.ell < 2 * (i - r.j)) throw InternalError("run_geometry without a run");
    const std::size_t p = i - r.j;
    return {p, r.ell / p + 1, r.j, r.j == r.pss ? RunDirection::Increasing : RunDirection::Decreasing};
}

LookaheadOutcome plan_lookahead(const Text& text, std::size_t i, std::size_t j, std::size_t ell, BuildStats* stats) {
    if (j == 0 || j >= i || ell >= 2 * (i - j) || ell / 4 < 2 || i + ell - 1 > text.size()) {
        throw UsageError("plan_lookahead preconditions violated");
    }
    if (stats != nullptr) {
        StatsSink<true> sink(stats);
        return plan(text, i, j, ell, sink);
    }
    StatsSink<false> sink;
    return plan(text, i, j, ell, sink);
}

AppendOnlyBps build_succinct(const Text& text, BuildStats* stats) {
    if (2 * text.size() + 2 > AppendOnlyBps::kMaxBits) {
        throw UsageError("succinct mode supports texts shorter than 2^30 symbols");
    }
    SuccinctMode mode(text);
    if (stats != nullptr) {
        drive(text, mode, StatsSink<true>(stats));
    } else {
        drive(text, mode, StatsSink<false>());
    }
    return std::move(mode).take();
}

template <typename Index>
void build_plain_into(const Text& text, std::span<Index> out, BuildStats* stats) {
    if (out.size() != text.size()) throw UsageError("output span must have one entry per symbol");
    if (text.size() >= std::numeric_limits<Index>::max()) throw UsageError("index type too narrow for this text");
    PlainMode<Index> mode(text, out);
    if (stats != nullptr) {
        drive(text, mode, StatsSink<true>(stats));
    } else {
        drive(text, mode, StatsSink<false>());
    }
}

template void build_plain_into<std::uint32_t>(const Text&, std::span<std::uint32_t>, BuildStats*);
template void build_plain_into<std::uint64_t>(const Text&, std::span<std::uint64_t>, BuildStats*);

LyndonArray build_plain(const Text& text, BuildStats* stats) {
    if (text.size() < (std::size_t{1} << 31)) {
        std::vector<std::uint32_t> out(text.size());
        build_plain_into<std::uint32_t>(text, out, stats);
        return out;
    }
    std::vector<std::uint64_t> out(text.size());
    build_plain_into<std::uint64_t>(text, out, stats);
    return out;
}

std::vector<std::uint64_t> widen(const LyndonArray& lambda) {
    return std::visit([](const auto& v) { return std::vector<std::uint64_t>(v.begin(), v.end()); }, lambda);
}

std::size_t size_of(const LyndonArray& lambda) noexcept {
    return std::visit([](const auto& v) { return v.size(); }, lambda);
}

} // namespace lyndon
