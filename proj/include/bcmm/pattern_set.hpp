#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bcmm/binary_vector.hpp"
#include "bcmm/errors.hpp"

namespace bcmm {

/// Ordered collection of equal-dimension bit vectors. Order matters: the
/// orthonormalization pass and key/value pairing are both positional.
class PatternSet {
public:
    PatternSet(std::size_t dimension, std::vector<BinaryVector> patterns)
        : dimension_(dimension), patterns_(std::move(patterns)) {
        validate();
    }

    /// Takes the dimension from the first pattern.
    explicit PatternSet(std::vector<BinaryVector> patterns)
        : dimension_(patterns.empty() ? 0 : patterns.front().dimension()),
          patterns_(std::move(patterns)) {
        validate();
    }

    /// The first `count` standard basis vectors of the given dimension.
    static PatternSet identity_basis(std::size_t dimension, std::size_t count) {
        if (count > dimension) {
            throw DimensionError("cannot build more basis vectors than the dimension");
        }
        std::vector<BinaryVector> patterns;
        patterns.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            patterns.push_back(BinaryVector::ones_at(dimension, {i}));
        }
        return PatternSet(dimension, std::move(patterns));
    }

    std::size_t dimension() const { return dimension_; }
    std::size_t size() const { return patterns_.size(); }

    const BinaryVector& operator[](std::size_t index) const { return patterns_.at(index); }
    const std::vector<BinaryVector>& patterns() const { return patterns_; }

    friend bool operator==(const PatternSet& a, const PatternSet& b) {
        return a.dimension_ == b.dimension_ && a.patterns_ == b.patterns_;
    }
    friend bool operator!=(const PatternSet& a, const PatternSet& b) { return !(a == b); }

private:
    void validate() const {
        if (patterns_.empty()) {
            throw EmptySetError("pattern set must contain at least one pattern");
        }
        for (const BinaryVector& p : patterns_) {
            if (p.dimension() != dimension_) {
                throw DimensionError("pattern dimension does not match the set dimension");
            }
        }
    }

    std::size_t dimension_;
    std::vector<BinaryVector> patterns_;
};

}  // namespace bcmm
