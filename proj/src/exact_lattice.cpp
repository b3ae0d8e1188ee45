#include "sasaki/exact_lattice.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <utility>

namespace sasaki {

Int gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

Int lcm(const Int& a, const Int& b) {
    return boost::multiprecision::lcm(a, b);
}

IntVec::IntVec(std::vector<Int> e, std::string label)
    : entries(std::move(e)), basis_label(std::move(label)) {
    if (entries.empty())
        fail("exact_lattice", "EmptyVector", "IntVec must have positive length");
}

bool IntVec::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](const Int& x) { return x == 0; });
}

Int IntVec::content() const {
    Int g = 0;
    for (const Int& x : entries) g = gcd(g, x);
    return g;
}

IntVec mod2(const IntVec& v) {
    IntVec r = v;
    for (Int& x : r.entries) x = ((x % 2) + 2) % 2;
    return r;
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        fail("exact_lattice", "DimensionMismatch", "dot of vectors of different length");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntMatrix::IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, Int(0)) {
    if (r == 0 || c == 0)
        fail("exact_lattice", "EmptyMatrix", "IntMatrix dimensions must be positive");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty() || rows.front().empty())
        fail("exact_lattice", "EmptyMatrix", "from_rows needs at least one row and column");
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols)
            fail("exact_lattice", "DimensionMismatch", "ragged rows in from_rows");
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntVec IntMatrix::row(std::size_t i) const {
    std::vector<Int> r(cols);
    for (std::size_t j = 0; j < cols; ++j) r[j] = at(i, j);
    return IntVec(std::move(r));
}

IntVec IntMatrix::col(std::size_t j) const {
    std::vector<Int> c(rows);
    for (std::size_t i = 0; i < rows; ++i) c[i] = at(i, j);
    return IntVec(std::move(c));
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](const Int& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows)
        fail("exact_lattice", "DimensionMismatch", "matrix product shape mismatch");
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntVec operator*(const IntMatrix& a, const IntVec& v) {
    if (a.cols != v.size())
        fail("exact_lattice", "DimensionMismatch", "matrix-vector shape mismatch");
    std::vector<Int> r(a.rows, Int(0));
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) r[i] += a.at(i, j) * v[j];
    return IntVec(std::move(r), v.basis_label);
}

Int det(const IntMatrix& a) {
    if (a.rows != a.cols)
        fail("exact_lattice", "DimensionMismatch", "determinant of a non-square matrix");
    const std::size_t n = a.rows;
    IntMatrix m = a;
    Int sign(1), prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && m.at(s, k) == 0) ++s;
            if (s == n) return Int(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(s, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

namespace {

// Working state for the Smith reduction.  Row operations act on B from the
// left, so U absorbs the inverse on the right and U_inv the operation itself;
// symmetrically for columns.  The invariant A = U * B * V holds throughout.
struct SnfWork {
    IntMatrix B, U, Uinv, V, Vinv;

    explicit SnfWork(const IntMatrix& a)
        : B(a),
          U(IntMatrix::identity(a.rows)),
          Uinv(U),
          V(IntMatrix::identity(a.cols)),
          Vinv(V) {}

    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < B.cols; ++c) std::swap(B.at(i, c), B.at(j, c));
        for (std::size_t r = 0; r < U.rows; ++r) std::swap(U.at(r, i), U.at(r, j));
        for (std::size_t c = 0; c < Uinv.cols; ++c) std::swap(Uinv.at(i, c), Uinv.at(j, c));
    }

    // row_i -= q * row_j
    void row_axpy(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < B.cols; ++c) B.at(i, c) -= q * B.at(j, c);
        for (std::size_t r = 0; r < U.rows; ++r) U.at(r, j) += q * U.at(r, i);
        for (std::size_t c = 0; c < Uinv.cols; ++c) Uinv.at(i, c) -= q * Uinv.at(j, c);
    }

    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < B.cols; ++c) B.at(i, c) = -B.at(i, c);
        for (std::size_t r = 0; r < U.rows; ++r) U.at(r, i) = -U.at(r, i);
        for (std::size_t c = 0; c < Uinv.cols; ++c) Uinv.at(i, c) = -Uinv.at(i, c);
    }

    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < B.rows; ++r) std::swap(B.at(r, i), B.at(r, j));
        for (std::size_t c = 0; c < V.cols; ++c) std::swap(V.at(i, c), V.at(j, c));
        for (std::size_t r = 0; r < Vinv.rows; ++r) std::swap(Vinv.at(r, i), Vinv.at(r, j));
    }

    // col_i -= q * col_j
    void col_axpy(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < B.rows; ++r) B.at(r, i) -= q * B.at(r, j);
        for (std::size_t c = 0; c < V.cols; ++c) V.at(j, c) += q * V.at(i, c);
        for (std::size_t r = 0; r < Vinv.rows; ++r) Vinv.at(r, i) -= q * Vinv.at(r, j);
    }
};

std::optional<std::pair<std::size_t, std::size_t>>
find_pivot(const IntMatrix& b, std::size_t t, SnfPivot rule, std::mt19937& rng) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    if (rule == SnfPivot::Randomized) {
        std::vector<std::pair<std::size_t, std::size_t>> nz;
        for (std::size_t i = t; i < b.rows; ++i)
            for (std::size_t j = t; j < b.cols; ++j)
                if (b.at(i, j) != 0) nz.emplace_back(i, j);
        if (nz.empty()) return std::nullopt;
        return nz[std::uniform_int_distribution<std::size_t>(0, nz.size() - 1)(rng)];
    }
    Int best_abs;
    for (std::size_t i = t; i < b.rows; ++i)
        for (std::size_t j = t; j < b.cols; ++j) {
            const Int& x = b.at(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!best || ax < best_abs) {
                best = {i, j};
                best_abs = ax;
            }
        }
    return best;
}

} // namespace

SnfResult snf(const IntMatrix& a) { return snf(a, SnfPivot::Canonical); }

SnfResult snf(const IntMatrix& a, SnfPivot pivot, unsigned seed) {
    if (a.rows == 0 || a.cols == 0)
        fail("exact_lattice", "EmptyMatrix", "snf of an empty matrix");
    SnfWork w(a);
    std::mt19937 rng(seed);
    const std::size_t m = a.rows, n = a.cols;
    std::size_t t = 0;
    while (t < std::min(m, n)) {
        auto piv = find_pivot(w.B, t, pivot, rng);
        if (!piv) break;
        w.row_swap(t, piv->first);
        w.col_swap(t, piv->second);

        // Euclidean sweeps until row t and column t are clear off the pivot.
        bool stable = false;
        while (!stable) {
            stable = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w.B.at(i, t) == 0) continue;
                w.row_axpy(i, t, w.B.at(i, t) / w.B.at(t, t));
                if (w.B.at(i, t) != 0) { // strictly smaller remainder becomes the pivot
                    w.row_swap(t, i);
                    stable = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.B.at(t, j) == 0) continue;
                w.col_axpy(j, t, w.B.at(t, j) / w.B.at(t, t));
                if (w.B.at(t, j) != 0) {
                    w.col_swap(t, j);
                    stable = false;
                }
            }
        }

        // Divisibility chain: fold in any row whose block entry the pivot
        // misses, then redo this stage with a smaller pivot.
        bool fixed = false;
        for (std::size_t i = t + 1; i < m && !fixed; ++i)
            for (std::size_t j = t + 1; j < n && !fixed; ++j)
                if (w.B.at(i, j) % w.B.at(t, t) != 0) {
                    w.row_axpy(t, i, Int(-1));
                    fixed = true;
                }
        if (fixed) continue;

        if (w.B.at(t, t) < 0) w.row_negate(t);
        ++t;
    }
    return SnfResult{std::move(w.U), std::move(w.B), std::move(w.V),
                     std::move(w.Uinv), std::move(w.Vinv)};
}

std::size_t SnfResult::rank() const {
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(D.rows, D.cols); ++i)
        if (D.at(i, i) != 0) ++r;
    return r;
}

std::vector<Int> SnfResult::diagonal() const {
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(D.rows, D.cols); ++i) d.push_back(D.at(i, i));
    return d;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
    if (a.rows != a.cols)
        fail("exact_lattice", "DimensionMismatch", "inverse of a non-square matrix");
    SnfResult s = snf(a);
    if (s.D != IntMatrix::identity(a.rows))
        fail("exact_lattice", "NotUnimodular", "matrix is not invertible over the integers");
    return s.V_inv * s.U_inv;
}

IntMatrix right_inverse(const IntMatrix& a) {
    if (a.rows > a.cols)
        fail("exact_lattice", "NotSurjective", "right inverse needs rows <= cols");
    SnfResult s = snf(a);
    for (std::size_t i = 0; i < a.rows; ++i)
        if (s.D.at(i, i) != 1)
            fail("exact_lattice", "NotSurjective", "matrix is not onto the integer lattice");
    IntMatrix dplus(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) dplus.at(i, i) = 1;
    return s.V_inv * dplus * s.U_inv;
}

IntMatrix QuotientLattice::free_projection() const {
    if (rank == 0)
        fail("exact_lattice", "EmptyMatrix", "quotient has no free part");
    IntMatrix f(rank, projection.cols);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < projection.cols; ++j)
            f.at(i, j) = projection.at(torsion.size() + i, j);
    return f;
}

bool QuotientLattice::annihilates(const IntVec& e) const {
    IntVec image = projection * e;
    for (std::size_t i = 0; i < torsion.size(); ++i)
        if (image[i] % torsion[i] != 0) return false;
    for (std::size_t i = torsion.size(); i < image.size(); ++i)
        if (image[i] != 0) return false;
    return true;
}

QuotientLattice quotient_by_vector(std::size_t ambient_rank, const IntVec& e) {
    return quotient_by_vector(ambient_rank, e, SnfPivot::Canonical, 0);
}

QuotientLattice quotient_by_vector(std::size_t ambient_rank, const IntVec& e,
                                   SnfPivot pivot, unsigned seed) {
    if (e.size() != ambient_rank)
        fail("exact_lattice", "DimensionMismatch", "vector length differs from ambient rank");
    if (e.is_zero())
        fail("exact_lattice", "ZeroVector", "cannot quotient by the zero vector");

    IntMatrix col(ambient_rank, 1);
    for (std::size_t i = 0; i < ambient_rank; ++i) col.at(i, 0) = e[i];
    SnfResult s = snf(col, pivot, seed);
    Int m = s.D.at(0, 0); // content of e, positive

    QuotientLattice q;
    q.rank = ambient_rank - 1;
    if (m > 1) q.torsion = {m};

    // Rows of U^{-1} are quotient coordinates: row 0 is the coordinate along
    // the primitive direction of e (torsion when m > 1, dropped when m = 1),
    // the remaining rows span the free quotient.
    const std::size_t keep = q.torsion.size() + q.rank;
    q.projection = IntMatrix(keep, ambient_rank);
    std::size_t out = 0;
    if (m > 1) {
        for (std::size_t j = 0; j < ambient_rank; ++j)
            q.projection.at(out, j) = s.U_inv.at(0, j);
        ++out;
    }
    for (std::size_t i = 1; i < ambient_rank; ++i, ++out)
        for (std::size_t j = 0; j < ambient_rank; ++j)
            q.projection.at(out, j) = s.U_inv.at(i, j);
    return q;
}

} // namespace sasaki
