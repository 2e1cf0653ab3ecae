#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bcmm/bit.hpp"
#include "bcmm/errors.hpp"

namespace bcmm {

/// Dense bit vector packed into 64-bit words.
///
/// Bit i lives in word i/64 at bit position i%64 (LSB first). Words past the
/// dimension are kept zero; every mutating operation restores that invariant,
/// so whole-word operations (AND, OR, popcount) never see stray bits.
class BinaryVector {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    /// Empty sentinel for containers and deferred assignment; not a valid
    /// operand for any operation.
    BinaryVector() = default;

    /// All-zero vector of the given dimension; dimension must be at least 1.
    explicit BinaryVector(std::size_t dimension)
        : dimension_(dimension), words_(word_count(dimension), 0) {
        if (dimension == 0) {
            throw DimensionError("vector dimension must be at least 1");
        }
    }

    /// Builds from per-bit values; bits[i] becomes component i.
    static BinaryVector from_bits(const std::vector<bool>& bits) {
        BinaryVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i]) v.set(i, Bit::one);
        }
        return v;
    }

    /// Vector with ones exactly at the listed positions.
    static BinaryVector ones_at(std::size_t dimension, const std::vector<std::size_t>& positions) {
        BinaryVector v(dimension);
        for (std::size_t i : positions) v.set(i, Bit::one);
        return v;
    }

    /// Adopts raw words. Padding bits in the last word must already be zero.
    static BinaryVector from_words(std::size_t dimension, std::vector<Word> words) {
        if (dimension == 0) {
            throw DimensionError("vector dimension must be at least 1");
        }
        if (words.size() != word_count(dimension)) {
            throw DimensionError("word count does not match dimension");
        }
        BinaryVector v;
        v.dimension_ = dimension;
        v.words_ = std::move(words);
        if (!v.padding_is_zero()) {
            throw FormatError("nonzero padding bits beyond the vector dimension");
        }
        return v;
    }

    std::size_t dimension() const { return dimension_; }
    std::size_t word_count() const { return words_.size(); }

    const Word* words() const { return words_.data(); }
    Word* words() { return words_.data(); }

    Bit test(std::size_t index) const {
        check_index(index);
        return make_bit((words_[index / kWordBits] >> (index % kWordBits)) & 1u);
    }

    void set(std::size_t index, Bit value) {
        check_index(index);
        const Word mask = Word{1} << (index % kWordBits);
        if (to_bool(value)) {
            words_[index / kWordBits] |= mask;
        } else {
            words_[index / kWordBits] &= ~mask;
        }
    }

    bool is_zero() const {
        for (Word w : words_) {
            if (w != 0) return false;
        }
        return true;
    }

    /// Number of one-bits (size of the support).
    std::size_t support_count() const {
        std::size_t total = 0;
        for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    /// '0'/'1' characters, component 0 first.
    std::string to_bit_string() const {
        std::string s(dimension_, '0');
        for (std::size_t i = 0; i < dimension_; ++i) {
            if (to_bool(test(i))) s[i] = '1';
        }
        return s;
    }

    BinaryVector& operator|=(const BinaryVector& other) {
        require_same_dimension(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    BinaryVector& operator&=(const BinaryVector& other) {
        require_same_dimension(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    BinaryVector& operator^=(const BinaryVector& other) {
        require_same_dimension(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
        return *this;
    }

    friend BinaryVector operator|(BinaryVector lhs, const BinaryVector& rhs) { return lhs |= rhs; }
    friend BinaryVector operator&(BinaryVector lhs, const BinaryVector& rhs) { return lhs &= rhs; }
    friend BinaryVector operator^(BinaryVector lhs, const BinaryVector& rhs) { return lhs ^= rhs; }

    /// Components of *this with the support of `other` removed (a & ~b).
    /// Stays padding-clean because it only ever clears bits.
    BinaryVector and_not(const BinaryVector& other) const {
        require_same_dimension(other);
        BinaryVector result(dimension_);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            result.words_[i] = words_[i] & ~other.words_[i];
        }
        return result;
    }

    friend bool operator==(const BinaryVector& a, const BinaryVector& b) {
        return a.dimension_ == b.dimension_ && a.words_ == b.words_;
    }
    friend bool operator!=(const BinaryVector& a, const BinaryVector& b) { return !(a == b); }

    void require_same_dimension(const BinaryVector& other) const {
        if (dimension_ != other.dimension_) {
            throw DimensionError("vector dimensions differ: " + std::to_string(dimension_) +
                                 " vs " + std::to_string(other.dimension_));
        }
    }

    static std::size_t word_count(std::size_t dimension) {
        return (dimension + kWordBits - 1) / kWordBits;
    }

    bool padding_is_zero() const {
        const std::size_t tail = dimension_ % kWordBits;
        if (tail == 0 || words_.empty()) return true;
        const Word mask = (Word{1} << tail) - 1;
        return (words_.back() & ~mask) == 0;
    }

private:
    void check_index(std::size_t index) const {
        if (index >= dimension_) {
            throw DimensionError("bit index " + std::to_string(index) +
                                 " out of range for dimension " + std::to_string(dimension_));
        }
    }

    std::size_t dimension_ = 0;
    std::vector<Word> words_;
};

/// Boolean inner product: 1 iff the supports intersect. Equivalent to
/// OR-reducing the element-wise AND, computed a word at a time.
inline Bit inner_and(const BinaryVector& a, const BinaryVector& b) {
    a.require_same_dimension(b);
    for (std::size_t i = 0; i < a.word_count(); ++i) {
        if (a.words()[i] & b.words()[i]) return Bit::one;
    }
    return Bit::zero;
}

/// Number of positions where the vectors disagree.
inline std::size_t hamming_distance(const BinaryVector& a, const BinaryVector& b) {
    a.require_same_dimension(b);
    std::size_t total = 0;
    for (std::size_t i = 0; i < a.word_count(); ++i) {
        total += static_cast<std::size_t>(std::popcount(a.words()[i] ^ b.words()[i]));
    }
    return total;
}

}  // namespace bcmm
