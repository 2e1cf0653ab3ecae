#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bcmm/binary_vector.hpp"
#include "bcmm/errors.hpp"

namespace bcmm {

/// Square Boolean matrix stored row-major as packed 64-bit words. Row i
/// occupies words [i * words_per_row, (i+1) * words_per_row) with the same
/// LSB-first layout as BinaryVector, padding included.
class BooleanMatrix {
public:
    using Word = BinaryVector::Word;

    BooleanMatrix() = default;

    explicit BooleanMatrix(std::size_t dimension)
        : dimension_(dimension),
          words_per_row_(BinaryVector::word_count(dimension)),
          words_(dimension * words_per_row_, 0) {}

    static BooleanMatrix identity(std::size_t dimension) {
        BooleanMatrix m(dimension);
        for (std::size_t i = 0; i < dimension; ++i) m.set(i, i, Bit::one);
        return m;
    }

    std::size_t dimension() const { return dimension_; }
    std::size_t words_per_row() const { return words_per_row_; }

    const Word* row_words(std::size_t row) const {
        check_row(row);
        return words_.data() + row * words_per_row_;
    }

    Bit get(std::size_t row, std::size_t col) const {
        check_row(row);
        check_col(col);
        const Word w = words_[row * words_per_row_ + col / BinaryVector::kWordBits];
        return make_bit((w >> (col % BinaryVector::kWordBits)) & 1u);
    }

    void set(std::size_t row, std::size_t col, Bit value) {
        check_row(row);
        check_col(col);
        Word& w = words_[row * words_per_row_ + col / BinaryVector::kWordBits];
        const Word mask = Word{1} << (col % BinaryVector::kWordBits);
        if (to_bool(value)) {
            w |= mask;
        } else {
            w &= ~mask;
        }
    }

    /// Copies row `row` out as a vector.
    BinaryVector row(std::size_t row) const {
        check_row(row);
        std::vector<Word> words(row_words(row), row_words(row) + words_per_row_);
        return BinaryVector::from_words(dimension_, std::move(words));
    }

    /// ORs a vector into row `row` in place.
    void or_row(std::size_t row, const BinaryVector& v) {
        check_row(row);
        if (v.dimension() != dimension_) {
            throw DimensionError("row vector dimension does not match matrix dimension");
        }
        Word* dst = words_.data() + row * words_per_row_;
        for (std::size_t i = 0; i < words_per_row_; ++i) dst[i] |= v.words()[i];
    }

    BooleanMatrix& operator|=(const BooleanMatrix& other) {
        if (dimension_ != other.dimension_) {
            throw DimensionError("matrix dimensions differ");
        }
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    friend BooleanMatrix operator|(BooleanMatrix lhs, const BooleanMatrix& rhs) {
        return lhs |= rhs;
    }

    friend bool operator==(const BooleanMatrix& a, const BooleanMatrix& b) {
        return a.dimension_ == b.dimension_ && a.words_ == b.words_;
    }
    friend bool operator!=(const BooleanMatrix& a, const BooleanMatrix& b) { return !(a == b); }

private:
    void check_row(std::size_t row) const {
        if (row >= dimension_) {
            throw DimensionError("row index out of range");
        }
    }
    void check_col(std::size_t col) const {
        if (col >= dimension_) {
            throw DimensionError("column index out of range");
        }
    }

    std::size_t dimension_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<Word> words_;
};

/// Boolean outer product: entry (i, n) = left[i] AND right[n]. Row i is the
/// whole of `right` when left[i] is one and all zeros otherwise, which makes
/// the row-wise form a straight word copy.
inline BooleanMatrix outer_and(const BinaryVector& left, const BinaryVector& right) {
    left.require_same_dimension(right);
    BooleanMatrix m(left.dimension());
    for (std::size_t i = 0; i < left.dimension(); ++i) {
        if (to_bool(left.test(i))) m.or_row(i, right);
    }
    return m;
}

/// Boolean matrix-vector product: component i is the inner product of row i
/// with `v` (1 iff the row's support meets the support of v).
inline BinaryVector matvec_and(const BooleanMatrix& m, const BinaryVector& v) {
    if (m.dimension() != v.dimension()) {
        throw DimensionError("matrix and vector dimensions differ");
    }
    BinaryVector out(m.dimension());
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        const BooleanMatrix::Word* row = m.row_words(i);
        for (std::size_t w = 0; w < m.words_per_row(); ++w) {
            if (row[w] & v.words()[w]) {
                out.set(i, Bit::one);
                break;
            }
        }
    }
    return out;
}

}  // namespace bcmm
