#pragma once

#include "lyndon/text.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace lyndon::bench {

enum class Algo { plain, succinct, naive };

Algo parse_algo(std::string_view name);
std::string_view to_string(Algo algo) noexcept;

/// Naive is the suffix-array reference; the bench command skips it beyond this size.
inline constexpr std::size_t kNaiveLimit = 1'000'000;

struct Row {
    std::string input;
    Algo algo;
    std::size_t bytes;
    double median_seconds;
    double mibs;
    /// Peak heap bytes allocated during one build beyond its own output, per symbol.
    double extra_bytes_per_symbol;
};

/// Runs one algorithm `repetitions` times (odd) and reports the median.
Row measure(const std::string& input, const Text& text, Algo algo, unsigned repetitions);

void print_table(std::ostream& out, const std::vector<Row>& rows);
void print_csv(std::ostream& out, const std::vector<Row>& rows);

} // namespace lyndon::bench
