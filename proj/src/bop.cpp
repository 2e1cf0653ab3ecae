#include "bcmm/bop.hpp"

#include "bcmm/errors.hpp"

namespace bcmm {

OrthonormalBasis orthonormalize(const PatternSet& input) {
    // c_k = a_k with every bit already claimed by c_1..c_{k-1} removed. The
    // claimed support is a running OR, so each step is two word passes.
    BinaryVector claimed(input.dimension());
    std::vector<BinaryVector> basis;
    basis.reserve(input.size());
    std::vector<std::size_t> source_index(input.size());
    std::vector<bool> zero_flags(input.size(), false);
    std::size_t nonzero_count = 0;

    for (std::size_t k = 0; k < input.size(); ++k) {
        BinaryVector c = input[k].and_not(claimed);
        claimed |= c;
        source_index[k] = k;
        if (c.is_zero()) {
            zero_flags[k] = true;
        } else {
            ++nonzero_count;
        }
        basis.push_back(std::move(c));
    }

    return OrthonormalBasis{PatternSet(input.dimension(), std::move(basis)),
                            std::move(source_index), std::move(zero_flags), nonzero_count};
}

OrthonormalityReport verify_orthonormal(const PatternSet& set) {
    OrthonormalityReport report;
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i].is_zero()) report.zero_vectors.push_back(i);
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            if (to_bool(inner_and(set[i], set[j]))) {
                report.violating_pairs.emplace_back(i, j);
            }
        }
    }
    report.is_orthogonal = report.violating_pairs.empty();
    report.is_orthonormal = report.is_orthogonal && report.zero_vectors.empty();
    return report;
}

BinaryVector prefix_union(const PatternSet& set, std::size_t count) {
    if (count == 0 || count > set.size()) {
        throw DimensionError("prefix length must be between 1 and the set size");
    }
    BinaryVector u(set.dimension());
    for (std::size_t k = 0; k < count; ++k) u |= set[k];
    return u;
}

}  // namespace bcmm
