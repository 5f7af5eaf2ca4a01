#pragma once

#include "lyndon/text.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

inline std::string random_string(std::mt19937_64& rng, std::size_t n, unsigned sigma, char base = 'a') {
    std::string s(n, '\0');
    std::uniform_int_distribution<unsigned> pick(0, sigma - 1);
    for (auto& c : s) c = static_cast<char>(sigma > 26 ? pick(rng) : base + pick(rng));
    return s;
}

/// Every string of the given length over the first sigma letters, in order.
template <typename F>
void for_each_string(std::size_t len, unsigned sigma, F&& f) {
    std::string s(len, 'a');
    while (true) {
        f(s);
        std::size_t x = len;
        while (x > 0 && s[x - 1] == static_cast<char>('a' + sigma - 1)) s[--x] = 'a';
        if (x == 0) return;
        ++s[x - 1];
    }
}

inline std::vector<std::uint64_t> to_u64(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

} // namespace testing_support
