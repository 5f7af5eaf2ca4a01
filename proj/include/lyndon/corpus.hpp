#pragma once

// Deterministic test and benchmark texts. Output depends only on the
// arguments (the generator is a fixed 64-bit Mersenne twister reduced by
// modulo, not a library distribution).

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lyndon::corpus {

enum class Kind { random, fibonacci, thue_morse, periodic, increasing, english };

Kind parse_kind(std::string_view name);
std::string_view to_string(Kind kind) noexcept;
std::vector<std::string_view> kind_names();

/// sigma: alphabet size for random and increasing, word length for periodic;
/// ignored by the other kinds. Alphabets up to 26 use the letters a..; larger
/// ones use byte values 0..sigma-1.
std::vector<std::uint8_t> generate(Kind kind, std::size_t n, unsigned sigma = 2, std::uint64_t seed = 1);

} // namespace lyndon::corpus
