#include "doctest.h"
#include "support.hpp"

#include "lyndon/duval.hpp"
#include "lyndon/text.hpp"

#include <optional>
#include <random>
#include <span>
#include <string_view>

using namespace lyndon;
using duval::ExtendedRun;
using duval::detect_extended_run;
using duval::factor_ends;

namespace {

std::span<const std::uint8_t> bytes(std::string_view s) {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

// The unique factorization into non-increasing Lyndon words, found greedily by
// taking the longest Lyndon prefix each time.
std::vector<std::size_t> greedy_factor_ends(std::string_view s) {
    std::vector<std::size_t> ends;
    std::size_t start = 0;
    while (start < s.size()) {
        std::size_t len = s.size() - start;
        while (!is_lyndon_word(bytes(s.substr(start, len)))) --len;
        start += len;
        ends.push_back(start);
    }
    return ends;
}

} // namespace

TEST_CASE("factor ends on fixed strings") {
    CHECK(factor_ends(bytes("northamerica")) == std::vector<std::size_t>{4, 5, 11, 12});
    CHECK(factor_ends(bytes("abaabaaba")) == std::vector<std::size_t>{2, 5, 8, 9});
    CHECK(factor_ends(bytes("a")) == std::vector<std::size_t>{1});
    CHECK(factor_ends(bytes("aaa")) == std::vector<std::size_t>{1, 2, 3});
    CHECK_THROWS_AS(factor_ends(bytes("")), UsageError);
}

TEST_CASE("streaming factorization matches the greedy one") {
    for (std::size_t len = 1; len <= 12; ++len) {
        testing_support::for_each_string(len, 2, [](const std::string& s) {
            REQUIRE(factor_ends(bytes(s)) == greedy_factor_ends(s));
        });
    }
    std::mt19937_64 rng(5);
    for (int round = 0; round < 500; ++round) {
        const std::string s = testing_support::random_string(rng, 1 + rng() % 80, 1 + rng() % 5);
        REQUIRE(factor_ends(bytes(s)) == greedy_factor_ends(s));
    }
}

TEST_CASE("detector on fixed strings") {
    CHECK(detect_extended_run(bytes("abaabaaba")) == ExtendedRun{3, 3});
    CHECK_FALSE(detect_extended_run(bytes("northamerica")).has_value());
    CHECK(detect_extended_run(bytes("aaaa")) == ExtendedRun{1, 1});
    CHECK_FALSE(detect_extended_run(bytes("ab")).has_value());
    CHECK(detect_extended_run(bytes("aabaab")) == ExtendedRun{3, 1});
}

TEST_CASE("detector output satisfies its contract") {
    std::mt19937_64 rng(9);
    for (int round = 0; round < 3000; ++round) {
        std::string s;
        if (rng() % 2 == 0) {
            s = testing_support::random_string(rng, 1 + rng() % 30, 1 + rng() % 3);
        } else {
            const std::string block = testing_support::random_string(rng, 1 + rng() % 5, 2);
            while (s.size() < 20) s += block;
            s = s.substr(rng() % block.size(), 8 + rng() % 12);
        }
        const auto run = detect_extended_run(bytes(s));
        if (!run) continue;
        CHECK(2 * run->period <= s.size());
        for (std::size_t x = run->period; x < s.size(); ++x) CHECK(s[x] == s[x - run->period]);
        CHECK(is_lyndon_word(bytes(std::string_view(s).substr(run->first_full_start - 1, run->period))));
    }
}

TEST_CASE("detector counts comparisons") {
    BuildStats stats;
    detect_extended_run(bytes("abaabaaba"), StatsSink<true>(&stats));
    CHECK(stats.char_comparisons > 0);
}

namespace {

// Algorithm 2 as written: full factorization, first longest factor, then the
// periodicity scan.
std::optional<ExtendedRun> detect_literal(std::span<const std::uint8_t> s) {
    std::size_t prev = 0;
    std::size_t longest = 0;
    std::size_t start = 1;
    for (std::size_t end : factor_ends(s)) {
        if (end - prev > longest) {
            longest = end - prev;
            start = prev + 1;
        }
        prev = end;
    }
    if (2 * longest > s.size()) return std::nullopt;
    for (std::size_t x = longest; x < s.size(); ++x) {
        if (s[x] != s[x - longest]) return std::nullopt;
    }
    return ExtendedRun{longest, start};
}

} // namespace

TEST_CASE("early exits agree with the literal algorithm") {
    for (std::size_t len = 1; len <= 12; ++len) {
        testing_support::for_each_string(len, 3, [](const std::string& s) {
            CHECK(detect_extended_run(bytes(s)) == detect_literal(bytes(s)));
        });
    }
    // t = 1 with suffix and prefix covering a period still passes the scan
    CHECK(detect_extended_run(bytes("accaacca")) == ExtendedRun{4, 4});
}
