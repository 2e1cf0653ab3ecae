#include <cstdint>
#include <vector>

#include "doctest.h"

#include "bcmm/bop.hpp"
#include "bcmm/errors.hpp"
#include "bcmm/oracle.hpp"
#include "bcmm/rng.hpp"
#include "helpers.hpp"

using namespace bcmm;
using bcmm::testing::pats;
using bcmm::testing::set_from_mask;
using bcmm::testing::vec;

namespace {

PatternSet orthonormalize_via_oracle(const PatternSet& input) {
    return oracle::pattern_set_from_naive(oracle::naive_bop(oracle::to_naive(input)));
}

}  // namespace

TEST_SUITE("bop") {

TEST_CASE("overlapping pair keeps the uncovered tail of the second vector") {
    const OrthonormalBasis out = orthonormalize(pats({"110", "101"}));
    CHECK(out.basis == pats({"110", "001"}));
    CHECK(out.basis == orthonormalize_via_oracle(pats({"110", "101"})));
    CHECK(out.zero_flags == std::vector<bool>{false, false});
    CHECK(out.nonzero_count == 2);
    CHECK(out.source_index == std::vector<std::size_t>{0, 1});
}

TEST_CASE("a singleton passes through unchanged") {
    const OrthonormalBasis out = orthonormalize(pats({"1011"}));
    CHECK(out.basis == pats({"1011"}));
    CHECK(out.nonzero_count == 1);
}

TEST_CASE("a fully covered vector comes out zero and is flagged") {
    const OrthonormalBasis out = orthonormalize(pats({"11", "10"}));
    CHECK(out.basis == pats({"11", "00"}));
    CHECK(out.basis == orthonormalize_via_oracle(pats({"11", "10"})));
    CHECK(out.zero_flags == std::vector<bool>{false, true});
    CHECK(out.nonzero_count == 1);
}

TEST_CASE("an already disjoint nonzero set is returned unchanged") {
    const PatternSet input = pats({"1100", "0010", "0001"});
    CHECK(orthonormalize(input).basis == input);
}

TEST_CASE("duplicate inputs survive as zero vectors, preserving indexing") {
    const OrthonormalBasis out = orthonormalize(pats({"101", "101", "010"}));
    CHECK(out.basis == pats({"101", "000", "010"}));
    CHECK(out.zero_flags == std::vector<bool>{false, true, false});
}

TEST_CASE("verification accepts the standard basis") {
    const OrthonormalityReport report =
        verify_orthonormal(PatternSet::identity_basis(5, 5));
    CHECK(report.is_orthogonal);
    CHECK(report.is_orthonormal);
    CHECK(report.violating_pairs.empty());
    CHECK(report.zero_vectors.empty());
}

TEST_CASE("verification reports the intersecting pair") {
    const OrthonormalityReport report = verify_orthonormal(pats({"110", "011"}));
    CHECK_FALSE(report.is_orthogonal);
    CHECK_FALSE(report.is_orthonormal);
    REQUIRE(report.violating_pairs.size() == 1);
    CHECK(report.violating_pairs[0] == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("verification separates zero vectors from orthogonality") {
    const OrthonormalityReport report = verify_orthonormal(pats({"10", "00"}));
    CHECK(report.is_orthogonal);
    CHECK_FALSE(report.is_orthonormal);
    CHECK(report.zero_vectors == std::vector<std::size_t>{1});
}

TEST_CASE("every orthonormalized random set verifies orthogonal") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        const PatternSet keys = random_pattern_set(rng, 32, 32, 0.5);
        const OrthonormalBasis out = orthonormalize(keys);
        const OrthonormalityReport report = verify_orthonormal(out.basis);
        REQUIRE(report.is_orthogonal);
        REQUIRE(report.zero_vectors.size() + out.nonzero_count == keys.size());
    }
}

TEST_CASE("prefix unions accumulate ORs over the leading vectors") {
    const PatternSet set = pats({"110", "001"});
    CHECK(prefix_union(set, 1) == vec("110"));
    CHECK(prefix_union(pats({"10", "01"}), 2) == vec("11"));
    CHECK(prefix_union(set, 2) == vec("111"));
    CHECK_THROWS_AS(prefix_union(set, 0), DimensionError);
    CHECK_THROWS_AS(prefix_union(set, 3), DimensionError);
}

TEST_CASE("element-wise and word-parallel forms agree on every tiny set") {
    for (std::size_t p = 1; p <= 4; ++p) {
        for (std::size_t q = 1; q <= 3; ++q) {
            const std::uint64_t sets = std::uint64_t{1} << (p * q);
            for (std::uint64_t mask = 0; mask < sets; ++mask) {
                const PatternSet input = set_from_mask(p, q, mask);
                REQUIRE(orthonormalize(input).basis == orthonormalize_via_oracle(input));
            }
        }
    }
}

TEST_CASE("element-wise and word-parallel forms agree on large random sets") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const PatternSet input = random_pattern_set(rng, 64, 64, 0.5);
        REQUIRE(orthonormalize(input).basis == orthonormalize_via_oracle(input));
    }
}

TEST_CASE("outputs never grow support and never lose coverage") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const PatternSet input = random_pattern_set(rng, 65, 20, 0.4);
        const OrthonormalBasis out = orthonormalize(input);
        for (std::size_t k = 0; k < input.size(); ++k) {
            REQUIRE(out.basis[k].and_not(input[k]).is_zero());
        }
        REQUIRE(prefix_union(out.basis, input.size()) ==
                prefix_union(input, input.size()));
    }
}

TEST_CASE("each output is its input minus the prefix union, on either side") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const PatternSet input = random_pattern_set(rng, 63, 12, 0.5);
        const OrthonormalBasis out = orthonormalize(input);
        for (std::size_t k = 1; k < input.size(); ++k) {
            const BinaryVector expected_from_outputs =
                input[k].and_not(prefix_union(out.basis, k));
            const BinaryVector expected_from_inputs =
                input[k].and_not(prefix_union(input, k));
            REQUIRE(out.basis[k] == expected_from_outputs);
            REQUIRE(out.basis[k] == expected_from_inputs);
        }
    }
}

TEST_CASE("orthonormalization is idempotent") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const PatternSet input = random_pattern_set(rng, 64, 24, 0.5);
        const PatternSet once = orthonormalize(input).basis;
        CHECK(orthonormalize(once).basis == once);
    }
}

TEST_CASE("results are deterministic and order-sensitive") {
    const PatternSet forward = pats({"11", "10"});
    const PatternSet reversed = pats({"10", "11"});
    CHECK(orthonormalize(forward).basis == orthonormalize(forward).basis);
    CHECK(orthonormalize(forward).basis == pats({"11", "00"}));
    CHECK(orthonormalize(reversed).basis == pats({"10", "01"}));
    CHECK(orthonormalize(forward).basis != orthonormalize(reversed).basis);
}

TEST_CASE("nonzero output count never exceeds the dimension") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const PatternSet input = random_pattern_set(rng, 16, 32, 0.5);
        CHECK(orthonormalize(input).nonzero_count <= 16);
    }
}

TEST_CASE("empty and mixed-dimension inputs are rejected at set construction") {
    CHECK_THROWS_AS(PatternSet(std::vector<BinaryVector>{}), EmptySetError);
    CHECK_THROWS_AS(PatternSet(3, {vec("101"), vec("10")}), DimensionError);
}

}
