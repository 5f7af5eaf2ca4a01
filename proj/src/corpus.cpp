#include "lyndon/corpus.hpp"

#include "lyndon/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <random>
#include <string>

namespace lyndon::corpus {

namespace {

constexpr std::array<std::string_view, 6> kNames{"random", "fibonacci", "thue-morse", "periodic", "increasing",
                                                 "english"};

std::uint8_t letter(unsigned k, unsigned sigma) {
    return static_cast<std::uint8_t>(sigma <= 26 ? 'a' + k : k);
}

// Letter frequencies of English prose (per mille, space included).
constexpr std::array<std::pair<char, unsigned>, 27> kEnglish{{
    {' ', 182}, {'e', 103}, {'t', 75}, {'a', 65}, {'o', 62}, {'n', 57}, {'i', 57}, {'s', 53}, {'r', 50},
    {'h', 50},  {'l', 33},  {'d', 33}, {'u', 23}, {'c', 22}, {'m', 20}, {'f', 18}, {'w', 17}, {'g', 16},
    {'y', 14},  {'p', 14},  {'b', 13}, {'v', 8},  {'k', 6},  {'x', 1},  {'j', 1},  {'q', 1},  {'z', 1},
}};

} // namespace

Kind parse_kind(std::string_view name) {
    for (std::size_t x = 0; x < kNames.size(); ++x) {
        if (kNames[x] == name) return static_cast<Kind>(x);
    }
    throw UsageError("unknown corpus kind '" + std::string(name) + "'");
}

std::string_view to_string(Kind kind) noexcept { return kNames[static_cast<std::size_t>(kind)]; }

std::vector<std::string_view> kind_names() { return {kNames.begin(), kNames.end()}; }

std::vector<std::uint8_t> generate(Kind kind, std::size_t n, unsigned sigma, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> out(n);
    switch (kind) {
    case Kind::random:
        if (sigma < 1 || sigma > 256) throw UsageError("random needs sigma in [1, 256]");
        for (auto& c : out) c = letter(static_cast<unsigned>(rng() % sigma), sigma);
        break;
    case Kind::fibonacci: {
        // fixed point of a -> ab, b -> a
        std::vector<std::uint8_t> prev{'a'};
        std::vector<std::uint8_t> cur{'a', 'b'};
        while (cur.size() < n) {
            std::vector<std::uint8_t> next = cur;
            next.insert(next.end(), prev.begin(), prev.end());
            prev = std::move(cur);
            cur = std::move(next);
        }
        std::copy_n(cur.begin(), n, out.begin());
        break;
    }
    case Kind::thue_morse:
        for (std::size_t x = 0; x < n; ++x) out[x] = (std::popcount(x) & 1) != 0 ? 'b' : 'a';
        break;
    case Kind::periodic: {
        if (sigma < 1) throw UsageError("periodic needs a word length of at least 1");
        // 'a' occurs once and first, so the word is a Lyndon word
        std::vector<std::uint8_t> word{'a'};
        for (unsigned x = 1; x < sigma; ++x) word.push_back(static_cast<std::uint8_t>('b' + rng() % 25));
        for (std::size_t x = 0; x < n; ++x) out[x] = word[x % word.size()];
        break;
    }
    case Kind::increasing:
        if (sigma < 1 || sigma > 256) throw UsageError("increasing needs sigma in [1, 256]");
        for (std::size_t x = 0; x < n; ++x) out[x] = letter(static_cast<unsigned>(x % sigma), sigma);
        break;
    case Kind::english: {
        std::array<unsigned, kEnglish.size()> cumulative{};
        unsigned total = 0;
        for (std::size_t x = 0; x < kEnglish.size(); ++x) cumulative[x] = total += kEnglish[x].second;
        for (auto& c : out) {
            const auto r = static_cast<unsigned>(rng() % total);
            std::size_t x = 0;
            while (cumulative[x] <= r) ++x;
            c = static_cast<std::uint8_t>(kEnglish[x].first);
        }
        break;
    }
    }
    return out;
}

} // namespace lyndon::corpus
