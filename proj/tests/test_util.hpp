#pragma once

#include <random>
#include <vector>

#include "sasaki/exact_lattice.hpp"

// Shared helpers for the test suites.  Everything here is test-only and
// independent of the code paths under test.

namespace sasaki::testutil {

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim = 6, int max_abs = 9) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<int> entry(-max_abs, max_abs);
    IntMatrix m(dim(rng), dim(rng));
    for (auto& x : m.entries) x = entry(rng);
    return m;
}

inline IntVec random_vector(std::mt19937& rng, std::size_t len, int max_abs = 9) {
    std::uniform_int_distribution<int> entry(-max_abs, max_abs);
    std::vector<Int> v(len);
    for (auto& x : v) x = entry(rng);
    return IntVec(std::move(v));
}

// Random unimodular matrix: a product of elementary row operations on I.
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int ops = 12) {
    IntMatrix m = IntMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> kind(0, 2);
    for (int t = 0; t < ops; ++t) {
        std::size_t i = idx(rng), j = idx(rng);
        switch (kind(rng)) {
        case 0:
            if (i != j)
                for (std::size_t c = 0; c < n; ++c) std::swap(m.at(i, c), m.at(j, c));
            break;
        case 1:
            for (std::size_t c = 0; c < n; ++c) m.at(i, c) = -m.at(i, c);
            break;
        default:
            if (i != j) {
                Int q(coef(rng));
                for (std::size_t c = 0; c < n; ++c) m.at(i, c) += q * m.at(j, c);
            }
        }
    }
    return m;
}

// Exact signature (positives, negatives, zeros) of a symmetric integer
// matrix by rational congruence reduction.
struct Signature {
    std::size_t positive = 0, negative = 0, zero = 0;
};

inline Signature signature(const IntMatrix& g) {
    const std::size_t n = g.rows;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(g.at(i, j));

    Signature sig;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        // pick a nonzero diagonal pivot, manufacturing one if needed
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && m[i][i] != Rational(0)) {
                p = i;
                break;
            }
        if (p == n) {
            // all remaining diagonal entries vanish; look for an off-diagonal
            bool found = false;
            for (std::size_t i = 0; i < n && !found; ++i)
                for (std::size_t j = i + 1; j < n && !found; ++j)
                    if (!done[i] && !done[j] && m[i][j] != Rational(0)) {
                        for (std::size_t c = 0; c < n; ++c) m[i][c] += m[j][c];
                        for (std::size_t r = 0; r < n; ++r) m[r][i] += m[r][j];
                        found = true;
                    }
            if (!found) break; // the rest is identically zero
            --step;
            continue;
        }
        done[p] = true;
        if (m[p][p] > Rational(0)) ++sig.positive;
        else ++sig.negative;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == p || done[i] || m[i][p] == Rational(0)) continue;
            Rational f = m[i][p] / m[p][p];
            for (std::size_t c = 0; c < n; ++c) m[i][c] -= f * m[p][c];
            for (std::size_t r = 0; r < n; ++r) m[r][i] -= f * m[r][p];
        }
    }
    sig.zero = n - sig.positive - sig.negative;
    return sig;
}

// Hand-chosen pullback matrix for the blow-up bundle with Euler vector
// (1, l2, 1, ..., 1): rows are the images of the k+2 base classes in k+1
// coordinates.  Row 1 is (-l2, 2, ..., 2), row 2 is e_1, and row i+2 has -2
// in column i+1.  Each column is orthogonal to the Euler vector.
inline IntMatrix reference_pullback_matrix(long long k, const Int& l2) {
    IntMatrix m(static_cast<std::size_t>(k) + 2, static_cast<std::size_t>(k) + 1);
    m.at(0, 0) = -l2;
    for (long long j = 1; j <= k; ++j) m.at(0, static_cast<std::size_t>(j)) = 2;
    m.at(1, 0) = 1;
    for (long long i = 0; i < k; ++i)
        m.at(static_cast<std::size_t>(i) + 2, static_cast<std::size_t>(i) + 1) = -2;
    return m;
}

} // namespace sasaki::testutil
