#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bcmm/pattern_set.hpp"

namespace bcmm {

/// Output of the orthonormalization pass. Vector k of `basis` is built from
/// input k; `source_index[k]` records that correspondence explicitly.
/// `zero_flags[k]` marks vectors whose support was fully covered by the
/// outputs before them (duplicates included), which come out all-zero.
struct OrthonormalBasis {
    PatternSet basis;
    std::vector<std::size_t> source_index;
    std::vector<bool> zero_flags;
    std::size_t nonzero_count = 0;
};

/// Result of checking a set for pairwise Boolean orthogonality.
struct OrthonormalityReport {
    /// No two distinct vectors share a one-position.
    bool is_orthogonal = false;
    /// Orthogonal and additionally every vector is nonzero.
    bool is_orthonormal = false;
    /// Distinct index pairs (i, j), i < j, whose supports intersect.
    std::vector<std::pair<std::size_t, std::size_t>> violating_pairs;
    /// Indices of all-zero vectors.
    std::vector<std::size_t> zero_vectors;
};

/// Sequentially strips from each input the support already claimed by the
/// outputs before it: output k keeps exactly the one-bits of input k that no
/// earlier output holds. First output equals the first input. The result is
/// pairwise disjoint by construction and preserves the running union of
/// supports, so recall through a memory trained on it cannot lose coverage.
OrthonormalBasis orthonormalize(const PatternSet& input);

/// Checks every distinct pair with the Boolean inner product and records
/// zero vectors. Does not throw on violations; callers decide severity.
OrthonormalityReport verify_orthonormal(const PatternSet& set);

/// OR of the first `count` patterns. `count` must be in [1, set.size()].
BinaryVector prefix_union(const PatternSet& set, std::size_t count);

}  // namespace bcmm
