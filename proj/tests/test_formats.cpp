#include "doctest.h"

#include "lyndon/construct.hpp"
#include "lyndon/corpus.hpp"
#include "lyndon/formats.hpp"
#include "lyndon/oracle.hpp"

#include <sstream>
#include <string>

using namespace lyndon;

namespace {

std::string as_string(const std::vector<std::uint8_t>& v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("LYAR layout") {
    const auto bytes = formats::to_bytes(build_plain(Text("northamerica")));
    REQUIRE(bytes.size() == 4 + 1 + 1 + 8 + 12 * 4);
    CHECK(as_string({bytes.begin(), bytes.begin() + 4}) == "LYAR");
    CHECK(bytes[4] == 1);
    CHECK(bytes[5] == 4);
    CHECK(bytes[6] == 12);
    for (int x = 7; x < 14; ++x) CHECK(bytes[x] == 0);
    CHECK(bytes[14] == 4);
    CHECK(bytes[14 + 4 * 5] == 6);
}

TEST_CASE("LYAR round trip in both widths") {
    const LyndonArray narrow = build_plain(Text("banana"));
    std::stringstream s1;
    formats::write_lyar(s1, narrow);
    CHECK(widen(formats::read_lyar(s1)) == widen(narrow));

    const LyndonArray wide = std::vector<std::uint64_t>{1, 2, 1, 2, 1, 1};
    std::stringstream s2;
    formats::write_lyar(s2, wide);
    const LyndonArray back = formats::read_lyar(s2);
    CHECK(std::holds_alternative<std::vector<std::uint64_t>>(back));
    CHECK(widen(back) == widen(wide));
}

TEST_CASE("LYAR rejects malformed input") {
    std::stringstream bad_magic("LYAX\x01\x04");
    CHECK_THROWS_AS(formats::read_lyar(bad_magic), IntegrityError);
    std::string trunc = as_string(formats::to_bytes(build_plain(Text("abc"))));
    trunc.pop_back();
    std::stringstream t(trunc);
    CHECK_THROWS_AS(formats::read_lyar(t), IntegrityError);
    std::string width = as_string(formats::to_bytes(build_plain(Text("abc"))));
    width[5] = 3;
    std::stringstream w(width);
    CHECK_THROWS_AS(formats::read_lyar(w), IntegrityError);
}

TEST_CASE("LBPS layout") {
    const auto bytes = formats::to_bytes(build_succinct(Text("a")));
    REQUIRE(bytes.size() == 4 + 1 + 8 + 1);
    CHECK(as_string({bytes.begin(), bytes.begin() + 4}) == "LBPS");
    CHECK(bytes[5] == 1);
    // (()) -> 1100 then zero padding
    CHECK(bytes[13] == 0xC0);
    const auto na = formats::to_bytes(build_succinct(Text("northamerica")));
    REQUIRE(na.size() == 13 + 4);
    // ((((())) = 11111000
    CHECK(na[13] == 0xF8);
}

TEST_CASE("LBPS round trip and queries") {
    std::stringstream s;
    formats::write_lbps(s, build_succinct(Text("northamerica")));
    const SuccinctPssTree tree = formats::read_lbps(s);
    CHECK(tree.n() == 12);
    CHECK(tree.lambda(6) == 6);
    CHECK(tree.pss(11) == 6);
    CHECK(tree.nss(12) == 13);
    CHECK(tree.bps().to_parens() == "((((())))()(()(()())())())");
}

TEST_CASE("LBPS rejects malformed input") {
    std::string good = as_string(formats::to_bytes(build_succinct(Text("northamerica"))));
    std::string unbalanced = good;
    unbalanced[13] = static_cast<char>(0x7F);
    std::stringstream a(unbalanced);
    CHECK_THROWS_AS(formats::read_lbps(a), IntegrityError);
    std::string padding = good;
    padding.back() = static_cast<char>(padding.back() | 1);
    std::stringstream b(padding);
    CHECK_THROWS_AS(formats::read_lbps(b), IntegrityError);
    std::string version = good;
    version[4] = 2;
    std::stringstream c(version);
    CHECK_THROWS_AS(formats::read_lbps(c), IntegrityError);
    std::stringstream d(good + "x");
    CHECK_THROWS_AS(formats::read_lbps(d), IntegrityError);
}

TEST_CASE("corpus generators") {
    using corpus::Kind;
    CHECK(as_string(corpus::generate(Kind::fibonacci, 13)) == "abaababaabaab");
    CHECK(as_string(corpus::generate(Kind::increasing, 3, 3)) == "abc");
    CHECK(corpus::generate(Kind::random, 0).empty());
    CHECK(as_string(corpus::generate(Kind::thue_morse, 8)) == "abbabaab");
    CHECK(corpus::generate(Kind::random, 1000, 4, 7) == corpus::generate(Kind::random, 1000, 4, 7));
    CHECK(corpus::generate(Kind::random, 1000, 4, 7) != corpus::generate(Kind::random, 1000, 4, 8));
    const auto periodic = corpus::generate(Kind::periodic, 40, 5, 3);
    CHECK(is_lyndon_word(std::span<const std::uint8_t>(periodic.data(), 5)));
    for (std::size_t x = 5; x < periodic.size(); ++x) CHECK(periodic[x] == periodic[x - 5]);
    const auto bytes = corpus::generate(Kind::random, 5000, 256, 1);
    CHECK(*std::max_element(bytes.begin(), bytes.end()) > 'z');
    CHECK(corpus::parse_kind("thue-morse") == Kind::thue_morse);
    CHECK_THROWS_AS(corpus::parse_kind("zipf"), UsageError);
    CHECK_THROWS_AS(corpus::generate(Kind::random, 4, 0), UsageError);
    CHECK_THROWS_AS(corpus::generate(Kind::random, 4, 257), UsageError);
}
