#include "bcmm/memory.hpp"

#include <limits>
#include <string>

#include "bcmm/errors.hpp"

namespace bcmm {

namespace {

/// Index of the stored key closest to the query: exact match wins, otherwise
/// minimum Hamming distance with the lowest index breaking ties. A single
/// ascending scan with strict improvement gives both rules at once.
std::size_t match_stored_key(const PatternSet& keys, const BinaryVector& query) {
    std::size_t best_index = 0;
    std::size_t best_distance = std::numeric_limits<std::size_t>::max();
    for (std::size_t k = 0; k < keys.size(); ++k) {
        const std::size_t d = hamming_distance(keys[k], query);
        if (d < best_distance) {
            best_distance = d;
            best_index = k;
            if (d == 0) break;
        }
    }
    return best_index;
}

}  // namespace

TrainedMemory train(const PatternSet& keys, const PatternSet& values, bool preprocess) {
    if (keys.size() != values.size()) {
        throw DimensionError("key and value counts differ: " + std::to_string(keys.size()) +
                             " vs " + std::to_string(values.size()));
    }
    if (keys.dimension() != values.dimension()) {
        throw DimensionError("key and value dimensions differ");
    }

    TrainedMemory mem;
    mem.dimension = keys.dimension();
    mem.pattern_count = keys.size();
    mem.preprocessed = preprocess;

    const PatternSet* effective = &keys;
    if (preprocess) {
        mem.stored_keys = keys;
        mem.basis = orthonormalize(keys);
        effective = &mem.basis->basis;
    }

    // M = OR over k of outer_and(value_k, key_k). Row i of each term is
    // key_k when value_k[i] is one, so accumulation is row-wise ORs.
    BooleanMatrix matrix(mem.dimension);
    bool any_nonzero_key = false;
    for (std::size_t k = 0; k < effective->size(); ++k) {
        const BinaryVector& key = (*effective)[k];
        const BinaryVector& value = values[k];
        if (!key.is_zero()) any_nonzero_key = true;
        for (std::size_t i = 0; i < mem.dimension; ++i) {
            if (to_bool(value.test(i))) matrix.or_row(i, key);
        }
    }
    mem.matrix = std::move(matrix);
    mem.all_keys_zero = !any_nonzero_key;
    return mem;
}

RecallResult recall(const TrainedMemory& mem, const BinaryVector& key, RecallMode mode) {
    if (key.dimension() != mem.dimension) {
        throw DimensionError("query dimension does not match the memory dimension");
    }
    if (mode == RecallMode::automatic) {
        mode = mem.preprocessed ? RecallMode::preprocessed : RecallMode::raw;
    }

    RecallResult result;
    if (mode == RecallMode::raw) {
        result.response = matvec_and(mem.matrix, key);
        return result;
    }

    if (!mem.preprocessed || !mem.stored_keys || !mem.basis) {
        throw StateError("preprocessed recall requires a memory trained with preprocessing");
    }
    const std::size_t k = match_stored_key(*mem.stored_keys, key);
    result.matched_index = k;
    result.matched_zero_basis = mem.basis->zero_flags[k];
    result.response = matvec_and(mem.matrix, mem.basis->basis[k]);
    return result;
}

RecallResult recall(const TrainedMemory& mem, const BinaryVector& key,
                    const BinaryVector& expected, RecallMode mode) {
    RecallResult result = recall(mem, key, mode);
    result.exact = (result.response == expected);
    return result;
}

std::vector<CrosstalkTerm> crosstalk_decomposition(const PatternSet& keys,
                                                   const PatternSet& values,
                                                   const BinaryVector& probe) {
    if (keys.size() != values.size()) {
        throw DimensionError("key and value counts differ");
    }
    if (keys.dimension() != values.dimension()) {
        throw DimensionError("key and value dimensions differ");
    }
    if (probe.dimension() != keys.dimension()) {
        throw DimensionError("probe dimension does not match the pattern dimension");
    }
    std::vector<CrosstalkTerm> terms;
    terms.reserve(keys.size());
    for (std::size_t k = 0; k < keys.size(); ++k) {
        terms.push_back(CrosstalkTerm{k, inner_and(keys[k], probe)});
    }
    return terms;
}

CapacityReport capacity_report(const OrthonormalBasis& basis) {
    CapacityReport report;
    report.dimension = basis.basis.dimension();
    report.pattern_count = basis.basis.size();
    report.storable_count = basis.nonzero_count;
    if (report.storable_count > report.dimension) {
        throw VerificationError("storable pattern count exceeds the dimension");
    }
    return report;
}

}  // namespace bcmm
