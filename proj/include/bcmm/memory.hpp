#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bcmm/bit.hpp"
#include "bcmm/boolean_matrix.hpp"
#include "bcmm/bop.hpp"
#include "bcmm/pattern_set.hpp"

namespace bcmm {

/// Associative memory built by OR-accumulating the Boolean outer products of
/// (value, key) pairs. Immutable after training; recall is pure.
struct TrainedMemory {
    BooleanMatrix matrix;
    std::size_t dimension = 0;
    std::size_t pattern_count = 0;
    /// True when keys were orthonormalized before accumulation. In that case
    /// the original keys and the derived basis are retained so recall can map
    /// a probe back to its basis vector.
    bool preprocessed = false;
    std::optional<PatternSet> stored_keys;
    std::optional<OrthonormalBasis> basis;
    /// Warning flag: every effective key was all-zero, so the matrix is zero
    /// and nothing can be recalled. Not an error; callers may still persist
    /// and probe the memory.
    bool all_keys_zero = false;
};

enum class RecallMode {
    /// Follow the memory: preprocessed memories use key matching, raw
    /// memories probe the matrix directly.
    automatic,
    /// Probe the matrix with the query as-is.
    raw,
    /// Match the query against the stored keys and probe with the matched
    /// basis vector. Requires a preprocessed memory.
    preprocessed,
};

struct RecallResult {
    BinaryVector response;
    /// Index of the stored key the query was matched to (preprocessed mode
    /// only).
    std::optional<std::size_t> matched_index;
    /// Set when the matched basis vector is all-zero: the response is zero
    /// not because nothing was stored but because this key lost its support
    /// during orthonormalization.
    bool matched_zero_basis = false;
    /// Whether the response equals caller-supplied ground truth; engaged only
    /// by the recall overload that takes an expected value.
    std::optional<bool> exact;
};

/// One term of the recall decomposition: stored index k and the Boolean
/// inner product of key k with the probe. The response to the probe is the
/// OR of values[k] over all k with coefficient one.
struct CrosstalkTerm {
    std::size_t index = 0;
    Bit coefficient = Bit::zero;
};

/// Capacity accounting for an orthonormalized basis: of `pattern_count`
/// inputs, `storable_count` survived with nonzero support and can be
/// recalled reliably; the rest were zero-flagged.
struct CapacityReport {
    std::size_t dimension = 0;
    std::size_t pattern_count = 0;
    std::size_t storable_count = 0;
};

/// Builds the memory matrix as the OR over k of outer_and(values[k],
/// effective_key[k]). With preprocess, the effective keys are the
/// orthonormalized basis of `keys` and both the keys and the basis are
/// retained in the result.
TrainedMemory train(const PatternSet& keys, const PatternSet& values, bool preprocess);

/// Recalls the response for a query key. See RecallMode for the probe rules.
RecallResult recall(const TrainedMemory& mem, const BinaryVector& key,
                    RecallMode mode = RecallMode::automatic);

/// As above, additionally comparing the response against `expected` and
/// setting RecallResult::exact.
RecallResult recall(const TrainedMemory& mem, const BinaryVector& key,
                    const BinaryVector& expected, RecallMode mode = RecallMode::automatic);

/// Per-stored-pattern coefficients for a probe against a raw memory over
/// (keys, values). Diagnostic: shows which stored patterns leak into the
/// response.
std::vector<CrosstalkTerm> crosstalk_decomposition(const PatternSet& keys,
                                                   const PatternSet& values,
                                                   const BinaryVector& probe);

/// Counts the reliably storable patterns of a basis and checks the count
/// never exceeds the dimension (a rank-style bound; exceeding it would mean
/// the orthonormalization is broken).
CapacityReport capacity_report(const OrthonormalBasis& basis);

}  // namespace bcmm
