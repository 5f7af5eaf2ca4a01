#include "doctest.h"
#include "support.hpp"

#include "lyndon/construct.hpp"
#include "lyndon/oracle.hpp"

#include <random>
#include <string>

using namespace lyndon;

namespace {

struct Built {
    oracle::Positions lambda;
    std::string parens;
    BuildStats plain_stats;
    BuildStats succinct_stats;
};

Built build_both(const std::string& s) {
    const Text t(s);
    Built b;
    b.lambda = widen(build_plain(t, &b.plain_stats));
    b.parens = build_succinct(t, &b.succinct_stats).to_parens();
    return b;
}

void check_against_oracle(const std::string& s) {
    const Text t(s);
    const Built b = build_both(s);
    const auto pss = oracle::pss_reference(t);
    INFO("text = " << s);
    REQUIRE(b.lambda == oracle::lyndon_array_reference(t));
    REQUIRE(b.parens == oracle::to_parens(oracle::bps_from_pss(pss)));
    CHECK(b.plain_stats.closes_written == s.size() + 1);
    CHECK(b.succinct_stats.closes_written == s.size() + 1);
}

// P_{i-1} from a pss array: i-1, pss(i-1), ..., 0.
RightmostPath path_before(const oracle::Positions& pss, std::size_t i) {
    RightmostPath path;
    for (std::size_t v = i - 1; v != 0; v = pss[v - 1]) path.nodes.push_back(v);
    path.nodes.push_back(0);
    return path;
}

} // namespace

TEST_CASE("find_pss on fixed paths") {
    const Text na("northamerica");
    const auto r7 = find_pss(na, {{6, 0}}, 7);
    CHECK(r7.m == 1);
    CHECK(r7.pss == 6);
    const auto r5 = find_pss(na, {{4, 3, 2, 1, 0}}, 5);
    CHECK(r5.pss == 0);
    CHECK(r5.m == 5);
    const auto r3 = find_pss(Text("aaaa"), {{2, 1, 0}}, 3);
    CHECK(r3.pss == 0);
    CHECK(r3.m == 3);
    CHECK(r3.ell == 2);
    CHECK(r3.j == 1); // tie between p_1 and p_2 goes to p_{m-1}
    CHECK_THROWS_AS(find_pss(na, {{5, 0}}, 7), UsageError);
    CHECK_THROWS_AS(find_pss(na, {{6, 3}}, 7), UsageError);
}

TEST_CASE("find_pss agrees with the oracle and its lce trace is bitonic") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 400; ++round) {
        const std::string s = testing_support::random_string(rng, 2 + rng() % 200, 1 + rng() % 3);
        const Text t(s);
        const auto pss = oracle::pss_bruteforce(t);
        for (std::size_t i = 1; i <= s.size(); ++i) {
            const RightmostPath path = path_before(pss, i);
            std::vector<LceProbe> trace;
            const PssSearchResult r = find_pss(t, path, i, nullptr, &trace);
            REQUIRE(r.pss == pss[i - 1]);
            REQUIRE(path.nodes[r.m - 1] == r.pss);
            std::size_t best = 0;
            for (const std::size_t node : path.nodes) best = std::max(best, lce(t, node, i));
            CHECK(r.ell == best);
            CHECK(lce(t, r.j, i) == r.ell);
            CHECK((r.j == r.pss || (r.m > 1 && r.j == path.nodes[r.m - 2])));
            // probed lce values, ordered by rank, rise and then fall
            std::sort(trace.begin(), trace.end(), [](const LceProbe& a, const LceProbe& b) { return a.rank < b.rank; });
            std::size_t x = 1;
            while (x < trace.size() && trace[x].lce >= trace[x - 1].lce) ++x;
            while (x < trace.size() && trace[x].lce <= trace[x - 1].lce) ++x;
            CHECK(x == trace.size());
        }
    }
}

TEST_CASE("paper example") {
    const Built b = build_both("northamerica");
    CHECK(b.lambda == oracle::Positions{4, 3, 2, 1, 1, 6, 1, 3, 1, 1, 1, 1});
    CHECK(b.parens == "((((())))()(()(()())())())");
    const SuccinctPssTree tree = build_succinct(Text("northamerica")).finalize();
    CHECK(tree.lambda(6) == 6);
    CHECK(tree.parent(9) == 8);
    CHECK(tree.nss(1) == 5);
}

TEST_CASE("small texts") {
    CHECK(build_both("").parens == "()");
    CHECK(build_both("").lambda.empty());
    CHECK(build_both("a").parens == "(())");
    CHECK(build_both("banana").lambda == oracle::Positions{1, 2, 1, 2, 1, 1});
    CHECK(build_both("aaaa").lambda == oracle::Positions{1, 1, 1, 1});
    CHECK(build_both("aaaa").parens == "(()()()())");
}

TEST_CASE("run extension on aaaaaa") {
    const Built b = build_both("aaaaaa");
    CHECK(b.parens == "(()()()()()())");
    // i = 2 sees j = 1 with lce 5, so t = 6 and nodes 3..6 are skipped
    CHECK(b.succinct_stats.run_extensions == 1);
    CHECK(b.succinct_stats.indices_skipped_run == 4);
    CHECK(b.plain_stats.indices_skipped_run == 4);
    CHECK(b.succinct_stats.indices_processed == 2);
}

TEST_CASE("run geometry") {
    const RunGeometry inc = run_geometry(4, {1, 1, 7, 1});
    CHECK(inc.direction == RunDirection::Increasing);
    CHECK(inc.mu_len == 3);
    CHECK(inc.t == 3);
    CHECK(inc.last() == 7);
    const RunGeometry dec = run_geometry(3, {2, 1, 6, 0});
    CHECK(dec.direction == RunDirection::Decreasing);
    CHECK(dec.t == 4);
    CHECK(dec.rep(2) == 3);
    CHECK_THROWS_AS(run_geometry(3, {2, 1, 3, 0}), InternalError);
}

TEST_CASE("increasing and decreasing runs") {
    for (const char* s : {"aabaabaab", "abababababab", "babababababa", "aaaaaaaaab", "baaaaaaaaa", "abcabcabcabcab",
                          "cbacbacbacbacb", "aabaabaabaabaabaab", "abaabaabaabaaba"}) {
        check_against_oracle(s);
    }
    BuildStats stats;
    build_succinct(Text("aabaabaab"), &stats);
    CHECK(stats.run_extensions >= 1);
}

TEST_CASE("run extension skips a third of the lce") {
    std::mt19937_64 rng(4);
    for (int round = 0; round < 200; ++round) {
        const std::string mu = testing_support::random_string(rng, 1 + rng() % 5, 2);
        std::string s = testing_support::random_string(rng, rng() % 5, 2);
        const std::size_t reps = 3 + rng() % 20;
        for (std::size_t r = 0; r < reps; ++r) s += mu;
        s += testing_support::random_string(rng, rng() % 5, 2);
        check_against_oracle(s);
        const Built b = build_both(s);
        if (b.succinct_stats.run_extensions > 0) {
            CHECK(3 * b.succinct_stats.indices_skipped_run + 6 * b.succinct_stats.run_extensions >=
                  b.succinct_stats.max_lce);
        }
    }
}

TEST_CASE("look-ahead copies and handoffs match the oracle") {
    std::mt19937_64 rng(21);
    BuildStats total;
    for (int round = 0; round < 3000; ++round) {
        // a repeated block with small perturbations makes long lce values with
        // a large distance between j and i
        const std::string block = testing_support::random_string(rng, 8 + rng() % 40, 2 + rng() % 2);
        std::string s;
        const std::size_t copies = 2 + rng() % 3;
        for (std::size_t c = 0; c < copies; ++c) {
            std::string piece = block;
            if (rng() % 2 == 0) piece[rng() % piece.size()] = 'a';
            if (rng() % 3 == 0) {
                const std::string inner = testing_support::random_string(rng, 1 + rng() % 3, 2);
                piece.insert(rng() % piece.size(), inner + inner + inner);
            }
            s += piece;
        }
        const Text t(s);
        BuildStats stats;
        const auto lambda = widen(build_plain(t, &stats));
        BuildStats sstats;
        const std::string parens = build_succinct(t, &sstats).to_parens();
        INFO("text = " << s);
        REQUIRE(lambda == oracle::lyndon_array_reference(t));
        REQUIRE(parens == oracle::to_parens(oracle::bps_from_pss(oracle::pss_reference(t))));
        REQUIRE(stats.closes_written == s.size() + 1);
        REQUIRE(sstats.closes_written == s.size() + 1);
        total.lookahead_full_copies += stats.lookahead_full_copies;
        total.lookahead_handoffs += stats.lookahead_handoffs;
        total.handoffs_resolved_by_run += stats.handoffs_resolved_by_run;
    }
    CHECK(total.lookahead_full_copies > 0);
    CHECK(total.lookahead_handoffs > 0);
    MESSAGE("full copies " << total.lookahead_full_copies << ", handoffs " << total.lookahead_handoffs
                           << ", resolved by a run " << total.handoffs_resolved_by_run);
}

TEST_CASE("plan_lookahead") {
    // xyz-periodic window: j = 1, i = 40, lce 16; window S[5..17) of a text
    // that repeats abc throughout
    std::string s;
    while (s.size() < 80) s += "abc";
    const Text t(s);
    const LookaheadOutcome out = plan_lookahead(t, 40, 1, 16);
    CHECK(out.kind == LookaheadOutcome::Kind::RunHandoff);
    CHECK(out.period == 3);
    CHECK(out.length == 3);
    CHECK(out.h == 40);
    const Text na("northamericanorthamerica");
    const LookaheadOutcome full = plan_lookahead(na, 13, 1, 12 - 4);
    CHECK(full.kind == LookaheadOutcome::Kind::FullCopy);
    CHECK(full.length == 2);
    CHECK_THROWS_AS(plan_lookahead(na, 13, 1, 30), UsageError);
}

TEST_CASE("exhaustive small texts") {
    for (std::size_t len = 1; len <= 10; ++len) {
        testing_support::for_each_string(len, 2, [](const std::string& s) { check_against_oracle(s); });
    }
    for (std::size_t len = 1; len <= 6; ++len) {
        testing_support::for_each_string(len, 3, [](const std::string& s) { check_against_oracle(s); });
    }
}

TEST_CASE("random texts") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 300; ++round) {
        const unsigned sigma = std::array<unsigned, 4>{2, 4, 26, 256}[rng() % 4];
        check_against_oracle(testing_support::random_string(rng, 1 + rng() % 3000, sigma));
    }
}

TEST_CASE("plain mode into a caller buffer") {
    const Text t("northamerica");
    std::vector<std::uint64_t> out(12);
    build_plain_into<std::uint64_t>(t, out, nullptr);
    CHECK(out == std::vector<std::uint64_t>{4, 3, 2, 1, 1, 6, 1, 3, 1, 1, 1, 1});
    std::vector<std::uint32_t> wrong(11);
    CHECK_THROWS_AS(build_plain_into<std::uint32_t>(t, wrong, nullptr), UsageError);
}
