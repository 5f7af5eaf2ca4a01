#include "doctest.h"

#include "lyndon/corpus.hpp"
#include "lyndon/error.hpp"
#include "lyndon/oracle.hpp"
#include "lyndon/text.hpp"

#include <algorithm>
#include <string>

using namespace lyndon;

namespace {

std::string gen(std::string_view kind, std::size_t n, unsigned sigma = 2, std::uint64_t seed = 1) {
    const auto bytes = corpus::generate(corpus::parse_kind(kind), n, sigma, seed);
    return {bytes.begin(), bytes.end()};
}

} // namespace

TEST_CASE("corpus: fixed kinds") {
    CHECK(gen("fibonacci", 13) == "abaababaabaab");
    CHECK(gen("thue-morse", 8) == "abbabaab");
    CHECK(gen("increasing", 3, 3) == "abc");
    CHECK(gen("increasing", 5, 2) == "ababa");
    CHECK(gen("random", 0).empty());
}

TEST_CASE("corpus: periodic repeats a Lyndon word") {
    for (unsigned sigma : {1u, 2u, 5u, 17u}) {
        const std::string s = gen("periodic", 100, sigma, 7);
        CHECK(is_lyndon_word(Text(s), 1, sigma));
        for (std::size_t x = sigma; x < s.size(); ++x) CHECK(s[x] == s[x - sigma]);
    }
}

TEST_CASE("corpus: alphabets") {
    for (char c : gen("random", 1000, 4, 3)) CHECK((c >= 'a' && c <= 'd'));
    const auto wide = corpus::generate(corpus::Kind::random, 5000, 256, 3);
    CHECK(*std::max_element(wide.begin(), wide.end()) > 200);
    for (char c : gen("english", 1000)) CHECK((c == ' ' || (c >= 'a' && c <= 'z')));
}

TEST_CASE("corpus: reproducible per seed") {
    CHECK(gen("random", 500, 26, 42) == gen("random", 500, 26, 42));
    CHECK(gen("random", 500, 26, 42) != gen("random", 500, 26, 43));
    CHECK(gen("english", 500, 2, 9) == gen("english", 500, 2, 9));
}

TEST_CASE("corpus: names round-trip and errors") {
    for (auto name : corpus::kind_names()) CHECK(corpus::to_string(corpus::parse_kind(name)) == name);
    CHECK_THROWS_AS(corpus::parse_kind("zigzag"), UsageError);
    CHECK_THROWS_AS(corpus::generate(corpus::Kind::random, 10, 0), UsageError);
    CHECK_THROWS_AS(corpus::generate(corpus::Kind::random, 10, 257), UsageError);
}
