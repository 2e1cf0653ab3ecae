#pragma once

#include <cstddef>
#include <vector>

#include "bcmm/binary_vector.hpp"
#include "bcmm/boolean_matrix.hpp"
#include "bcmm/pattern_set.hpp"

namespace bcmm::oracle {

/// Unpacked 0/1 elements, one int per component. Deliberately the least
/// clever representation available: this module is the ground truth the
/// word-parallel code is tested against, so it must stay obviously correct.
/// No optimization is permitted here.
using NaiveVector = std::vector<int>;

/// Row-major unpacked matrix; element [i][n] is entry (i, n).
using NaiveMatrix = std::vector<NaiveVector>;

NaiveVector to_naive(const BinaryVector& v);
BinaryVector from_naive(const NaiveVector& v);
NaiveMatrix to_naive(const BooleanMatrix& m);
std::vector<NaiveVector> to_naive(const PatternSet& set);
PatternSet pattern_set_from_naive(const std::vector<NaiveVector>& vectors);

/// OR over n of u[n] AND v[n].
int naive_inner_and(const NaiveVector& u, const NaiveVector& v);

/// Matrix with entry (i, n) = b[i] AND a[n].
NaiveMatrix naive_outer_and(const NaiveVector& b, const NaiveVector& a);

/// Memory matrix: entry (i, n) = OR over k of values[k][i] AND keys[k][n].
NaiveMatrix naive_train(const std::vector<NaiveVector>& keys,
                        const std::vector<NaiveVector>& values);

/// Response: element i = OR over n of m[i][n] AND key[n].
NaiveVector naive_recall(const NaiveMatrix& m, const NaiveVector& key);

/// Sequential orthonormalization, element by element: output 1 copies input
/// 1; for each later vector k, element j is input[k][j] XOR the OR over all
/// predecessors i < k of (output[i][j] AND input[k][j]), with the OR
/// accumulated in a scalar initialized to zero per (j, k).
std::vector<NaiveVector> naive_bop(const std::vector<NaiveVector>& input);

}  // namespace bcmm::oracle
