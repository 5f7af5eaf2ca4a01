#include "lyndon/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace lyndon::oracle {

Positions pss_bruteforce(const Text& text) {
    const std::size_t n = text.size();
    Positions pss(n, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i - 1; j >= 1; --j) {
            if (suffix_compare(text, j, i).outcome == Order::Less) {
                pss[i - 1] = j;
                break;
            }
        }
    }
    return pss;
}

Positions nss_bruteforce(const Text& text) {
    const std::size_t n = text.size();
    Positions nss(n, n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
            if (suffix_compare(text, j, i).outcome == Order::Less) {
                nss[i - 1] = j;
                break;
            }
        }
    }
    return nss;
}

Positions lyndon_array_bruteforce(const Text& text) {
    const std::size_t n = text.size();
    Positions lambda(n, 1);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t len = n - i + 1; len >= 1; --len) {
            if (is_lyndon_word(text, i, len)) {
                lambda[i - 1] = len;
                break;
            }
        }
    }
    return lambda;
}

std::vector<bool> bps_from_pss(const Positions& pss) {
    const std::size_t n = pss.size();
    // children[v] in ascending order, as adjacency ranges over a flat array
    std::vector<std::size_t> first(n + 2, 0);
    for (std::size_t i = 1; i <= n; ++i) ++first[pss[i - 1] + 1];
    std::partial_sum(first.begin(), first.end(), first.begin());
    std::vector<std::size_t> child(n);
    std::vector<std::size_t> fill(first.begin(), first.end() - 1);
    for (std::size_t i = 1; i <= n; ++i) child[fill[pss[i - 1]]++] = i;

    std::vector<bool> bits;
    bits.reserve(2 * n + 2);
    std::vector<std::pair<std::size_t, std::size_t>> stack; // (node, next child slot)
    stack.emplace_back(0, first[0]);
    bits.push_back(true);
    while (!stack.empty()) {
        auto& [node, slot] = stack.back();
        if (slot < first[node + 1]) {
            const std::size_t c = child[slot++];
            bits.push_back(true);
            stack.emplace_back(c, first[c]);
        } else {
            bits.push_back(false);
            stack.pop_back();
        }
    }
    return bits;
}

std::vector<bool> bps_bruteforce(const Text& text) { return bps_from_pss(pss_bruteforce(text)); }

Positions preorder_numbers(const Positions& pss) {
    const std::size_t n = pss.size();
    std::vector<std::vector<std::size_t>> children(n + 1);
    for (std::size_t i = 1; i <= n; ++i) children[pss[i - 1]].push_back(i);

    Positions number(n + 1, 0);
    std::uint64_t next_number = 0;
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
        const std::size_t node = stack.back();
        stack.pop_back();
        number[node] = next_number++;
        for (auto c = children[node].rbegin(); c != children[node].rend(); ++c) stack.push_back(*c);
    }
    return number;
}

Positions suffix_array_reference(const Text& text) {
    const std::size_t n = text.size();
    Positions sa(n);
    std::iota(sa.begin(), sa.end(), 0);
    std::vector<std::int64_t> rank(n);
    std::vector<std::int64_t> next_rank(n);
    for (std::size_t x = 0; x < n; ++x) rank[x] = text.data()[x];

    for (std::size_t h = 1;; h *= 2) {
        auto key = [&](std::uint64_t x) {
            return std::pair<std::int64_t, std::int64_t>(rank[x], x + h < n ? rank[x + h] : -1);
        };
        std::sort(sa.begin(), sa.end(), [&](std::uint64_t a, std::uint64_t b) { return key(a) < key(b); });
        std::int64_t r = 0;
        for (std::size_t x = 0; x < n; ++x) {
            if (x > 0 && key(sa[x - 1]) != key(sa[x])) ++r;
            next_rank[sa[x]] = r;
        }
        rank.swap(next_rank);
        if (n == 0 || static_cast<std::size_t>(r) == n - 1) break;
    }
    for (auto& p : sa) ++p;
    return sa;
}

namespace {

Positions inverse_suffix_array(const Text& text) {
    const Positions sa = suffix_array_reference(text);
    Positions isa(sa.size());
    for (std::size_t r = 0; r < sa.size(); ++r) isa[sa[r] - 1] = r;
    return isa;
}

} // namespace

Positions nss_reference(const Text& text) {
    const std::size_t n = text.size();
    const Positions isa = inverse_suffix_array(text);
    Positions nss(n, n + 1);
    std::vector<std::size_t> stack;
    for (std::size_t i = n; i >= 1; --i) {
        while (!stack.empty() && isa[stack.back() - 1] > isa[i - 1]) stack.pop_back();
        if (!stack.empty()) nss[i - 1] = stack.back();
        stack.push_back(i);
    }
    return nss;
}

Positions pss_reference(const Text& text) {
    const std::size_t n = text.size();
    const Positions isa = inverse_suffix_array(text);
    Positions pss(n, 0);
    std::vector<std::size_t> stack;
    for (std::size_t i = 1; i <= n; ++i) {
        while (!stack.empty() && isa[stack.back() - 1] > isa[i - 1]) stack.pop_back();
        if (!stack.empty()) pss[i - 1] = stack.back();
        stack.push_back(i);
    }
    return pss;
}

Positions lyndon_array_reference(const Text& text) {
    Positions lambda = nss_reference(text);
    for (std::size_t i = 1; i <= lambda.size(); ++i) lambda[i - 1] -= i;
    return lambda;
}

std::string to_parens(const std::vector<bool>& bits) {
    std::string s;
    s.reserve(bits.size());
    for (bool b : bits) s.push_back(b ? '(' : ')');
    return s;
}

std::vector<bool> from_parens(std::string_view parens) {
    std::vector<bool> bits;
    bits.reserve(parens.size());
    for (char c : parens) {
        if (c != '(' && c != ')') throw UsageError("parentheses string may only contain '(' and ')'");
        bits.push_back(c == '(');
    }
    return bits;
}

} // namespace lyndon::oracle
