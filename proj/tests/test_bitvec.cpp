#include <cstdint>
#include <vector>

#include "doctest.h"

#include "bcmm/binary_vector.hpp"
#include "bcmm/boolean_matrix.hpp"
#include "bcmm/errors.hpp"
#include "bcmm/oracle.hpp"
#include "bcmm/rng.hpp"
#include "helpers.hpp"

using namespace bcmm;
using bcmm::testing::mat;
using bcmm::testing::vec;
using bcmm::testing::vec_from_mask;

TEST_SUITE("bitvec") {

TEST_CASE("bit layout is LSB-first within 64-bit words") {
    BinaryVector v(65);
    v.set(0, Bit::one);
    v.set(63, Bit::one);
    v.set(64, Bit::one);
    CHECK(v.word_count() == 2);
    CHECK(v.words()[0] == ((std::uint64_t{1} << 63) | 1u));
    CHECK(v.words()[1] == 1u);
    CHECK(v.to_bit_string().front() == '1');
    CHECK(v.to_bit_string().back() == '1');
}

TEST_CASE("construction rejects dimension zero") {
    CHECK_THROWS_AS(BinaryVector(0), DimensionError);
    CHECK_THROWS_AS(BinaryVector::from_words(0, {}), DimensionError);
}

TEST_CASE("from_words enforces canonical padding and word count") {
    CHECK_THROWS_AS(BinaryVector::from_words(3, {0b1000}), FormatError);
    CHECK_THROWS_AS(BinaryVector::from_words(65, {0, 2}), FormatError);
    CHECK_THROWS_AS(BinaryVector::from_words(65, {0}), DimensionError);
    const BinaryVector v = BinaryVector::from_words(3, {0b101});
    CHECK(v == vec("101"));
}

TEST_CASE("inner product is 1 exactly when supports intersect") {
    CHECK(inner_and(vec("101"), vec("010")) == Bit::zero);
    CHECK(inner_and(vec("000"), vec("000")) == Bit::zero);
    CHECK(inner_and(vec("110"), vec("101")) == Bit::one);
    CHECK(oracle::naive_inner_and({1, 1, 0}, {1, 0, 1}) == 1);
    CHECK_THROWS_AS(inner_and(vec("10"), vec("100")), DimensionError);
}

TEST_CASE("outer product places the right vector on rows selected by the left") {
    CHECK(outer_and(vec("01"), vec("11")) == mat({"00", "11"}));
    CHECK(outer_and(vec("000"), vec("111")) == BooleanMatrix(3));
    CHECK(outer_and(vec("10"), vec("01")) == mat({"01", "00"}));
    CHECK(oracle::naive_outer_and({0, 1}, {1, 1}) ==
          oracle::NaiveMatrix{{0, 0}, {1, 1}});
    CHECK_THROWS_AS(outer_and(vec("10"), vec("100")), DimensionError);
}

TEST_CASE("matrix OR accumulates without clearing") {
    const BooleanMatrix x = mat({"10", "00"});
    CHECK((BooleanMatrix(2) | x) == x);
    CHECK((x | x) == x);
    CHECK((mat({"10", "00"}) | mat({"00", "01"})) == mat({"10", "01"}));
    BooleanMatrix wrong(3);
    CHECK_THROWS_AS(wrong |= x, DimensionError);
}

TEST_CASE("matrix-vector product takes per-row inner products") {
    const BinaryVector x = vec("0110");
    CHECK(matvec_and(BooleanMatrix::identity(4), x) == x);
    CHECK(matvec_and(BooleanMatrix(4), x) == BinaryVector(4));
    CHECK(matvec_and(mat({"000", "100", "010"}), vec("100")) == vec("010"));
    CHECK(oracle::naive_recall({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {1, 0, 0}) ==
          oracle::NaiveVector{0, 1, 0});
    CHECK_THROWS_AS(matvec_and(BooleanMatrix(3), vec("10")), DimensionError);
}

TEST_CASE("and_not removes exactly the masked support") {
    CHECK(vec("110").and_not(vec("000")) == vec("110"));
    CHECK(vec("110").and_not(vec("110")) == vec("000"));
    CHECK(vec("101").and_not(vec("110")) == vec("001"));
}

TEST_CASE("elementwise OR, AND, and XOR") {
    CHECK((vec("1100") | vec("0110")) == vec("1110"));
    CHECK((vec("1100") & vec("0110")) == vec("0100"));
    CHECK((vec("1100") ^ vec("0110")) == vec("1010"));
}

TEST_CASE("is_zero and support_count ignore padding") {
    CHECK(vec("000").is_zero());
    CHECK(vec("000").support_count() == 0);
    CHECK_FALSE(vec("101").is_zero());
    CHECK(vec("101").support_count() == 2);
    const BinaryVector ones70 = vec(std::string(70, '1'));
    CHECK_FALSE(ones70.is_zero());
    CHECK(ones70.support_count() == 70);
}

TEST_CASE("canonical padding survives every operation across word boundaries") {
    for (std::size_t p : {std::size_t{1}, std::size_t{63}, std::size_t{64}, std::size_t{65},
                          std::size_t{128}, std::size_t{1000}}) {
        SplitMix64 rng(p);
        for (int round = 0; round < 20; ++round) {
            BinaryVector a = random_vector(rng, p, 0.7);
            BinaryVector b = random_vector(rng, p, 0.3);
            CHECK(a.padding_is_zero());
            CHECK((a | b).padding_is_zero());
            CHECK((a & b).padding_is_zero());
            CHECK((a ^ b).padding_is_zero());
            CHECK(a.and_not(b).padding_is_zero());
            CHECK((a | b).support_count() + (a & b).support_count() ==
                  a.support_count() + b.support_count());
        }
    }
}

TEST_CASE("inner product equals the element-wise reference, exhaustively and at scale") {
    for (std::size_t p = 1; p <= 4; ++p) {
        for (std::uint64_t um = 0; um < (1u << p); ++um) {
            for (std::uint64_t vm = 0; vm < (1u << p); ++vm) {
                const BinaryVector u = vec_from_mask(p, um);
                const BinaryVector v = vec_from_mask(p, vm);
                const int expected = oracle::naive_inner_and(oracle::to_naive(u),
                                                             oracle::to_naive(v));
                CHECK(to_bool(inner_and(u, v)) == (expected == 1));
                CHECK(inner_and(u, v) == inner_and(v, u));
            }
        }
    }
    SplitMix64 rng(99);
    for (int round = 0; round < 10000; ++round) {
        const BinaryVector u = random_vector(rng, 257, 0.02);
        const BinaryVector v = random_vector(rng, 257, 0.02);
        const int expected =
            oracle::naive_inner_and(oracle::to_naive(u), oracle::to_naive(v));
        REQUIRE(to_bool(inner_and(u, v)) == (expected == 1));
    }
}

TEST_CASE("self inner product detects nonzero vectors") {
    for (std::size_t p = 1; p <= 4; ++p) {
        for (std::uint64_t m = 0; m < (1u << p); ++m) {
            const BinaryVector u = vec_from_mask(p, m);
            CHECK(to_bool(inner_and(u, u)) == !u.is_zero());
        }
    }
}

TEST_CASE("matvec over an outer product factors through the inner product") {
    for (std::uint64_t bm = 0; bm < 8; ++bm) {
        for (std::uint64_t am = 0; am < 8; ++am) {
            for (std::uint64_t xm = 0; xm < 8; ++xm) {
                const BinaryVector b = vec_from_mask(3, bm);
                const BinaryVector a = vec_from_mask(3, am);
                const BinaryVector x = vec_from_mask(3, xm);
                const BinaryVector got = matvec_and(outer_and(b, a), x);
                const BinaryVector expected =
                    to_bool(inner_and(a, x)) ? b : BinaryVector(3);
                CHECK(got == expected);
            }
        }
    }
    SplitMix64 rng(7);
    for (int round = 0; round < 200; ++round) {
        const BinaryVector b = random_vector(rng, 257, 0.1);
        const BinaryVector a = random_vector(rng, 257, 0.1);
        const BinaryVector x = random_vector(rng, 257, 0.1);
        const BinaryVector expected = to_bool(inner_and(a, x)) ? b : BinaryVector(257);
        REQUIRE(matvec_and(outer_and(b, a), x) == expected);
    }
}

TEST_CASE("matrix rows round-trip and or_row accumulates") {
    BooleanMatrix m(70);
    const BinaryVector r = vec_from_mask(70, 0x123456789ULL) | BinaryVector::ones_at(70, {69});
    m.or_row(3, r);
    CHECK(m.row(3) == r);
    m.or_row(3, BinaryVector::ones_at(70, {0}));
    CHECK(m.row(3) == (r | BinaryVector::ones_at(70, {0})));
    CHECK(m.row(0).is_zero());
    CHECK_THROWS_AS(m.row(70), DimensionError);
    CHECK_THROWS_AS(m.get(0, 70), DimensionError);
}

TEST_CASE("out-of-range bit access throws") {
    BinaryVector v(5);
    CHECK_THROWS_AS(v.test(5), DimensionError);
    CHECK_THROWS_AS(v.set(5, Bit::one), DimensionError);
}

}
