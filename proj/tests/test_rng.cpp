#include <cstdint>

#include "doctest.h"

#include "bcmm/rng.hpp"

using namespace bcmm;

TEST_SUITE("rng") {

TEST_CASE("generator reproduces the published output sequence") {
    SplitMix64 a(0);
    CHECK(a.next() == 0xE220A8397B1DCDAFULL);
    CHECK(a.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(a.next() == 0x06C45D188009454FULL);

    SplitMix64 b(1234567);
    CHECK(b.next() == 0x599ED017FB08FC85ULL);
    CHECK(b.next() == 0x2C73F08458540FA5ULL);
    CHECK(b.next() == 0x883EBCE5A3F27C77ULL);
}

TEST_CASE("per-trial seeds are frozen and distinct") {
    CHECK(derive_trial_seed(1, 0) == 10451216379200822465ULL);
    CHECK(derive_trial_seed(1, 1) == 13757245211066428519ULL);
    CHECK(derive_trial_seed(1, 0) != derive_trial_seed(2, 0));
}

TEST_CASE("density thresholds clamp at the extremes") {
    CHECK(density_threshold(0.0) == 0);
    CHECK(density_threshold(-1.0) == 0);
    CHECK(density_threshold(1.0) == ~std::uint64_t{0});
    CHECK(density_threshold(2.0) == ~std::uint64_t{0});
    CHECK(density_threshold(0.5) == 0x8000000000000000ULL);
}

TEST_CASE("one draw per bit, in index order, compared against the threshold") {
    // Seed 0 draws: 0xE220.. (high bit set), 0x6E78.., 0x06C4.., so at
    // density 0.5 the three components are 0, 1, 1.
    SplitMix64 rng(0);
    const BinaryVector v = random_vector(rng, 3, 0.5);
    CHECK(v.to_bit_string() == "011");
}

TEST_CASE("density extremes give empty and full vectors with clean padding") {
    SplitMix64 rng(9);
    CHECK(random_vector(rng, 70, 0.0).is_zero());
    const BinaryVector full = random_vector(rng, 70, 1.0);
    CHECK(full.support_count() == 70);
    CHECK(full.padding_is_zero());
}

TEST_CASE("sampling is deterministic for a fixed seed") {
    SplitMix64 a(12345);
    SplitMix64 b(12345);
    CHECK(random_vector(a, 129, 0.5) == random_vector(b, 129, 0.5));
}

TEST_CASE("a sampled set equals the same draws taken vector by vector") {
    SplitMix64 a(777);
    SplitMix64 b(777);
    const PatternSet set = random_pattern_set(a, 33, 4, 0.3);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(set[k] == random_vector(b, 33, 0.3));
    }
}

}
