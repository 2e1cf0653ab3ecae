#include "bcmm/oracle.hpp"

#include "bcmm/errors.hpp"

namespace bcmm::oracle {

namespace {

void check_element(int e) {
    if (e != 0 && e != 1) {
        throw DimensionError("naive vector elements must be 0 or 1");
    }
}

void check_same_size(const NaiveVector& u, const NaiveVector& v) {
    if (u.size() != v.size()) {
        throw DimensionError("naive vector sizes differ");
    }
}

}  // namespace

NaiveVector to_naive(const BinaryVector& v) {
    NaiveVector out(v.dimension(), 0);
    for (std::size_t i = 0; i < v.dimension(); ++i) {
        out[i] = to_bool(v.test(i)) ? 1 : 0;
    }
    return out;
}

BinaryVector from_naive(const NaiveVector& v) {
    BinaryVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        check_element(v[i]);
        if (v[i] == 1) out.set(i, Bit::one);
    }
    return out;
}

NaiveMatrix to_naive(const BooleanMatrix& m) {
    NaiveMatrix out(m.dimension(), NaiveVector(m.dimension(), 0));
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        for (std::size_t n = 0; n < m.dimension(); ++n) {
            out[i][n] = to_bool(m.get(i, n)) ? 1 : 0;
        }
    }
    return out;
}

std::vector<NaiveVector> to_naive(const PatternSet& set) {
    std::vector<NaiveVector> out;
    out.reserve(set.size());
    for (std::size_t k = 0; k < set.size(); ++k) out.push_back(to_naive(set[k]));
    return out;
}

PatternSet pattern_set_from_naive(const std::vector<NaiveVector>& vectors) {
    std::vector<BinaryVector> patterns;
    patterns.reserve(vectors.size());
    for (const NaiveVector& v : vectors) patterns.push_back(from_naive(v));
    return PatternSet(std::move(patterns));
}

int naive_inner_and(const NaiveVector& u, const NaiveVector& v) {
    check_same_size(u, v);
    int result = 0;
    for (std::size_t n = 0; n < u.size(); ++n) {
        result = result | (u[n] & v[n]);
    }
    return result;
}

NaiveMatrix naive_outer_and(const NaiveVector& b, const NaiveVector& a) {
    check_same_size(b, a);
    const std::size_t p = b.size();
    NaiveMatrix m(p, NaiveVector(p, 0));
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t n = 0; n < p; ++n) {
            m[i][n] = b[i] & a[n];
        }
    }
    return m;
}

NaiveMatrix naive_train(const std::vector<NaiveVector>& keys,
                        const std::vector<NaiveVector>& values) {
    if (keys.size() != values.size()) {
        throw DimensionError("key and value counts differ");
    }
    if (keys.empty()) {
        throw DimensionError("at least one association is required");
    }
    const std::size_t p = keys.front().size();
    for (std::size_t k = 0; k < keys.size(); ++k) {
        if (keys[k].size() != p || values[k].size() != p) {
            throw DimensionError("association dimensions differ");
        }
    }
    NaiveMatrix m(p, NaiveVector(p, 0));
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t n = 0; n < p; ++n) {
            for (std::size_t k = 0; k < keys.size(); ++k) {
                m[i][n] = m[i][n] | (values[k][i] & keys[k][n]);
            }
        }
    }
    return m;
}

NaiveVector naive_recall(const NaiveMatrix& m, const NaiveVector& key) {
    const std::size_t p = m.size();
    if (key.size() != p) {
        throw DimensionError("matrix and key dimensions differ");
    }
    NaiveVector b(p, 0);
    for (std::size_t i = 0; i < p; ++i) {
        if (m[i].size() != p) {
            throw DimensionError("matrix is not square");
        }
        for (std::size_t n = 0; n < p; ++n) {
            b[i] = b[i] | (m[i][n] & key[n]);
        }
    }
    return b;
}

std::vector<NaiveVector> naive_bop(const std::vector<NaiveVector>& input) {
    if (input.empty()) {
        throw EmptySetError("at least one input vector is required");
    }
    const std::size_t p = input.front().size();
    const std::size_t q = input.size();
    for (const NaiveVector& v : input) {
        if (v.size() != p) {
            throw DimensionError("input vector sizes differ");
        }
        for (int e : v) check_element(e);
    }

    std::vector<NaiveVector> c(q, NaiveVector(p, 0));
    c[0] = input[0];
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t k = 1; k < q; ++k) {
            int acu = 0;
            for (std::size_t i = 0; i < k; ++i) {
                acu = acu | (c[i][j] & input[k][j]);
            }
            c[k][j] = input[k][j] ^ acu;
        }
    }
    return c;
}

}  // namespace bcmm::oracle
