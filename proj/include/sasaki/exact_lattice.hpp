#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "sasaki/error.hpp"

// Exact integer linear algebra over free abelian groups: gcd/lcm, Smith
// normal form, lattice quotients and mod-2 reduction.  Everything is
// arbitrary precision; there is no floating point in this library.

namespace sasaki {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;

Int gcd(const Int& a, const Int& b); // non-negative, gcd(0,0) = 0
Int lcm(const Int& a, const Int& b);

// Coefficient vector over a named basis.
struct IntVec {
    std::vector<Int> entries;
    std::string basis_label = "std";

    IntVec() = default;
    explicit IntVec(std::vector<Int> e, std::string label = "std");

    std::size_t size() const { return entries.size(); }
    const Int& operator[](std::size_t i) const { return entries[i]; }
    Int& operator[](std::size_t i) { return entries[i]; }

    bool is_zero() const;
    Int content() const; // gcd of the entries, >= 0

    bool operator==(const IntVec&) const = default;
};

// Entrywise reduction to {0,1}; sign-insensitive and idempotent.
IntVec mod2(const IntVec& v);

Int dot(const IntVec& a, const IntVec& b);

// Dense row-major integer matrix.
struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> entries;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    const Int& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
    Int& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }

    IntVec row(std::size_t i) const;
    IntVec col(std::size_t j) const;
    IntMatrix transposed() const;
    bool is_zero() const;

    bool operator==(const IntMatrix&) const = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVec operator*(const IntMatrix& a, const IntVec& v);

// Exact determinant (fraction-free Bareiss elimination).
Int det(const IntMatrix& a);

// Inverse of an integer matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& a);

// Integer right inverse S with A*S = I for a surjective A (rows <= cols,
// all Smith invariants 1).
IntMatrix right_inverse(const IntMatrix& a);

enum class SnfPivot {
    Canonical,  // smallest |entry|, ties by lowest row then column
    Randomized, // any nonzero entry; used to probe basis independence
};

// A = U * D * V with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
// The inverses are accumulated alongside so callers can change basis both ways.
struct SnfResult {
    IntMatrix U, D, V;
    IntMatrix U_inv, V_inv;

    std::size_t rank() const; // number of nonzero diagonal entries
    std::vector<Int> diagonal() const;
};

SnfResult snf(const IntMatrix& a);
SnfResult snf(const IntMatrix& a, SnfPivot pivot, unsigned seed = 0);

// Z^ambient modulo the subgroup generated by a single vector e.
// `projection` maps ambient coordinates to quotient coordinates; torsion
// coordinates (understood modulo their order) come first, then the free ones.
struct QuotientLattice {
    std::size_t rank = 0;
    std::vector<Int> torsion;  // each > 1, in divisibility order
    IntMatrix projection;      // (|torsion| + rank) x ambient

    IntMatrix free_projection() const; // the trailing `rank` rows
    // Torsion rows vanish modulo their order, free rows vanish exactly.
    bool annihilates(const IntVec& e) const;
};

QuotientLattice quotient_by_vector(std::size_t ambient_rank, const IntVec& e);
QuotientLattice quotient_by_vector(std::size_t ambient_rank, const IntVec& e,
                                   SnfPivot pivot, unsigned seed);

} // namespace sasaki
