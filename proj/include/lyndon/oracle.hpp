#pragma once

// Slow reference implementations. Arrays are indexed so that element [i - 1]
// belongs to text position i.
//
// The *_bruteforce functions follow the definitions literally and are meant
// for short texts (a few thousand symbols). The *_reference functions go
// through a prefix-doubling suffix array and nearest smaller values on the
// inverse suffix array; they share no code with the linear builders and are
// usable up to a few million symbols.

#include "lyndon/text.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lyndon::oracle {

using Positions = std::vector<std::uint64_t>;

Positions pss_bruteforce(const Text& text);
Positions nss_bruteforce(const Text& text);
Positions lyndon_array_bruteforce(const Text& text);

/// Balanced parentheses of the PSS tree (open = true), 2n+2 entries.
std::vector<bool> bps_bruteforce(const Text& text);

/// Preorder parentheses of the tree whose parent array is pss (children ascending).
std::vector<bool> bps_from_pss(const Positions& pss);

/// 1-based starting positions of the suffixes in lexicographic order.
Positions suffix_array_reference(const Text& text);
Positions pss_reference(const Text& text);
Positions nss_reference(const Text& text);
Positions lyndon_array_reference(const Text& text);

/// Preorder number of each node 0..n in the tree given by pss.
Positions preorder_numbers(const Positions& pss);

std::string to_parens(const std::vector<bool>& bits);
std::vector<bool> from_parens(std::string_view parens);

} // namespace lyndon::oracle
