#include "lyndon/duval.hpp"

namespace lyndon::duval {

std::vector<std::size_t> factor_ends(std::span<const std::uint8_t> s) {
    std::vector<std::size_t> ends;
    FactorStream<> stream(s);
    while (const auto end = stream.next()) ends.push_back(*end);
    return ends;
}

} // namespace lyndon::duval
