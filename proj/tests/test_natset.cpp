#include <doctest.h>

#include <random>
#include <stdexcept>

#include "cgt/natset.hpp"

using namespace cgt;

namespace {

// Independent mex by direct scan of 0, 1, 2, ...
std::uint64_t mex_scan(const NatSet& a) {
    for (std::uint64_t i = 0;; ++i)
        if (!a.contains(i)) return i;
}

NatSet random_set(std::mt19937_64& rng, std::uint64_t max_value,
                  std::size_t max_size) {
    std::uniform_int_distribution<std::size_t> size_dist(0, max_size);
    std::uniform_int_distribution<std::uint64_t> val_dist(0, max_value);
    std::vector<std::uint64_t> xs;
    for (std::size_t i = size_dist(rng); i-- > 0;) xs.push_back(val_dist(rng));
    return NatSet::from_values(std::move(xs));
}

}  // namespace

TEST_CASE("mex") {
    CHECK(mex(NatSet{}) == 0);
    CHECK(mex(NatSet{0, 1, 2, 3, 4}) == 5);
    CHECK(mex(NatSet{0, 2, 3}) == mex_scan(NatSet{0, 2, 3}));
    CHECK(mex(NatSet{0, 2, 3}) == 1);
    CHECK(mex(NatSet{1, 2, 3}) == 0);
}

TEST_CASE("colon") {
    CHECK(colon(NatSet{2, 4, 5}, NatSet{0, 1, 2, 3, 4}) ==
          NatSet{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(colon(NatSet{1, 3}, NatSet{}) == NatSet{1, 3});
    CHECK(colon(NatSet{}, NatSet{0, 2, 5}) == NatSet{0, 2, 5});
    CHECK(colon(NatSet{7}, NatSet{0, 1, 8, 9, 10, 11, 12, 13, 14, 15}) ==
          NatSet{0, 1, 7, 9, 10, 11, 12, 13, 14, 15, 16});
}

TEST_CASE("translations") {
    CHECK(xor_translate(NatSet{0, 1}, 3) == NatSet{2, 3});
    CHECK(xor_translate(NatSet{0, 1, 2, 3, 4, 5, 6, 7}, 10) ==
          NatSet{8, 9, 10, 11, 12, 13, 14, 15});
    CHECK(xor_translate(NatSet{3, 9, 17}, 0) == NatSet{3, 9, 17});
    CHECK(add_translate(NatSet{0, 2, 3}, 2) == NatSet{2, 4, 5});
    CHECK(add_translate(NatSet{0, 1, 2, 3}, 1) == NatSet{1, 2, 3, 4});
    CHECK(add_translate(NatSet{5, 11}, 0) == NatSet{5, 11});
    CHECK_THROWS_AS(add_translate(NatSet{~0ull}, 1), std::overflow_error);
}

TEST_CASE("mex of colon picks the indexed complement element") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 2000; ++trial) {
        NatSet a = random_set(rng, 20, 8);
        NatSet b = random_set(rng, 20, 8);
        // mex(A : B) = x_{mex B}, the mex(B)-th element of A's complement.
        std::uint64_t want = 0;
        for (std::uint64_t idx = mex(b), c = 0;; ++c) {
            if (a.contains(c)) continue;
            if (idx == 0) {
                want = c;
                break;
            }
            --idx;
        }
        CHECK(mex(colon(a, b)) == want);
    }
}

TEST_CASE("mex-add lemma") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        NatSet a = random_set(rng, 15, 8);
        NatSet b = random_set(rng, 15, 8);
        CHECK(mex(colon(add_translate(a, mex(b)), b)) == mex(a) + mex(b));
    }
}

TEST_CASE("equal-mex right operands give equal colon mex") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        NatSet a = random_set(rng, 15, 8);
        NatSet b1 = random_set(rng, 15, 8);
        NatSet b2 = random_set(rng, 15, 8);
        if (mex(b1) != mex(b2)) continue;
        CHECK(mex(colon(a, b1)) == mex(colon(a, b2)));
    }
}

TEST_CASE("xor translate is an involution") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        NatSet a = random_set(rng, 100, 12);
        std::uint64_t x = rng() % 128;
        CHECK(xor_translate(xor_translate(a, x), x) == a);
        CHECK(xor_translate(a, x).size() == a.size());
    }
}
