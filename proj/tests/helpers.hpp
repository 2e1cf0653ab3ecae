#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bcmm/binary_vector.hpp"
#include "bcmm/boolean_matrix.hpp"
#include "bcmm/pattern_set.hpp"

namespace bcmm::testing {

/// "101" -> vector with bits 0 and 2 set.
inline BinaryVector vec(const std::string& bits) {
    BinaryVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') v.set(i, Bit::one);
    }
    return v;
}

inline PatternSet pats(const std::vector<std::string>& rows) {
    std::vector<BinaryVector> patterns;
    patterns.reserve(rows.size());
    for (const std::string& row : rows) patterns.push_back(vec(row));
    return PatternSet(std::move(patterns));
}

/// Square matrix from row strings.
inline BooleanMatrix mat(const std::vector<std::string>& rows) {
    BooleanMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (rows[i][j] == '1') m.set(i, j, Bit::one);
        }
    }
    return m;
}

/// Vector of dimension p whose bit i is bit i of mask; mask enumerates all
/// vectors for p <= 64.
inline BinaryVector vec_from_mask(std::size_t p, std::uint64_t mask) {
    BinaryVector v(p);
    for (std::size_t i = 0; i < p; ++i) {
        if ((mask >> i) & 1u) v.set(i, Bit::one);
    }
    return v;
}

/// Set of q vectors of dimension p decoded from mask, vector k taking bits
/// [k*p, (k+1)*p); mask enumerates all sets for p*q <= 64.
inline PatternSet set_from_mask(std::size_t p, std::size_t q, std::uint64_t mask) {
    std::vector<BinaryVector> patterns;
    patterns.reserve(q);
    for (std::size_t k = 0; k < q; ++k) {
        patterns.push_back(vec_from_mask(p, mask >> (k * p)));
    }
    return PatternSet(p, std::move(patterns));
}

}  // namespace bcmm::testing
