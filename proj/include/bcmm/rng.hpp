#pragma once

#include <cmath>
#include <cstdint>
#include <cstddef>

#include "bcmm/pattern_set.hpp"

namespace bcmm {

/// SplitMix64 generator. Chosen because the whole algorithm fits in a few
/// lines that can be re-implemented from this header alone, which keeps the
/// seeded experiment streams reproducible across languages and toolchains.
///
/// State update per draw:
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return finalize(state_);
    }

    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 1;

/// Per-trial seed for trial t of an experiment run with master seed `seed`.
/// Equals the (t+1)-th raw state of SplitMix64(seed) pushed through the
/// output mix, so consecutive trials get decorrelated streams.
inline std::uint64_t derive_trial_seed(std::uint64_t seed, std::uint64_t trial) {
    return SplitMix64::finalize(seed + (trial + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Threshold such that draw < threshold happens with probability `density`.
/// Densities at or below 0 give no ones; at or above 1, all ones.
inline std::uint64_t density_threshold(double density) {
    if (density <= 0.0) return 0;
    if (density >= 1.0) return ~std::uint64_t{0};
    return static_cast<std::uint64_t>(std::floor(density * 18446744073709551616.0));
}

/// Samples each component independently: one generator draw per bit, in
/// index order, bit i = 1 iff draw < threshold(density).
inline BinaryVector random_vector(SplitMix64& rng, std::size_t dimension, double density) {
    const std::uint64_t threshold = density_threshold(density);
    BinaryVector v(dimension);
    for (std::size_t i = 0; i < dimension; ++i) {
        if (rng.next() < threshold) v.set(i, Bit::one);
    }
    return v;
}

/// Samples `count` vectors in order, each drawn as in random_vector.
inline PatternSet random_pattern_set(SplitMix64& rng, std::size_t dimension, std::size_t count,
                                     double density) {
    std::vector<BinaryVector> patterns;
    patterns.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        patterns.push_back(random_vector(rng, dimension, density));
    }
    return PatternSet(dimension, std::move(patterns));
}

}  // namespace bcmm
