#include "doctest.h"

#include "lyndon/simd.hpp"

#include <random>
#include <vector>

using namespace lyndon::simd;

namespace {

std::vector<const Kernels*> available() {
    std::vector<const Kernels*> out{&kernels_for(Isa::scalar)};
    if (supported(Isa::avx2)) out.push_back(&kernels_for(Isa::avx2));
    return out;
}

} // namespace

TEST_CASE("mismatch kernels agree") {
    std::mt19937_64 rng(1);
    for (int round = 0; round < 2000; ++round) {
        const std::size_t len = rng() % 300;
        std::vector<std::uint8_t> a(len + 1);
        for (auto& c : a) c = static_cast<std::uint8_t>(rng() % 3);
        std::vector<std::uint8_t> b = a;
        if (len > 0 && rng() % 4 != 0) b[rng() % len] ^= 1;
        const std::size_t expected = scalar::mismatch(a.data(), b.data(), len);
        for (const Kernels* k : available()) CHECK(k->mismatch(a.data(), b.data(), len) == expected);
    }
}

TEST_CASE("min search kernels agree") {
    std::mt19937_64 rng(2);
    for (int round = 0; round < 2000; ++round) {
        const std::size_t count = rng() % 70;
        std::vector<std::int32_t> v(count);
        for (auto& x : v) x = static_cast<std::int32_t>(rng() % 41) - 20;
        const auto bound = static_cast<std::int32_t>(rng() % 41) - 20;
        const std::size_t right = scalar::rightmost_at_most(v.data(), count, bound);
        const std::size_t left = scalar::leftmost_at_most(v.data(), count, bound);
        for (const Kernels* k : available()) {
            CHECK(k->rightmost_at_most(v.data(), count, bound) == right);
            CHECK(k->leftmost_at_most(v.data(), count, bound) == left);
        }
    }
    const std::int32_t none[3] = {5, 6, 7};
    CHECK(scalar::rightmost_at_most(none, 3, 4) == kNotFound);
    CHECK(scalar::leftmost_at_most(none, 3, 5) == 0);
}

TEST_CASE("popcount kernels agree") {
    std::mt19937_64 rng(3);
    for (std::size_t count = 0; count < 40; ++count) {
        std::vector<std::uint64_t> w(count);
        for (auto& x : w) x = rng();
        const std::uint64_t expected = scalar::popcount(w.data(), count);
        for (const Kernels* k : available()) CHECK(k->popcount(w.data(), count) == expected);
    }
    const std::uint64_t ones[5] = {~0ull, ~0ull, ~0ull, ~0ull, ~0ull};
    CHECK(kernels().popcount(ones, 5) == 320);
}
