#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sasaki/exact_lattice.hpp"

// Classification of closed simply connected oriented smooth 5-manifolds by
// (H_2, Barden invariant), plus the toric admissibility predicate.

namespace sasaki {

// The Barden invariant: a non-negative integer or infinity, ordered
// 0 < 1 < 2 < ... < inf.
class BardenIndex {
public:
    static BardenIndex finite(long long j);
    static BardenIndex infinity();

    bool is_infinite() const { return v_ < 0; }
    long long value() const; // finite values only

    bool operator==(const BardenIndex&) const = default;
    bool operator<(const BardenIndex& o) const;

    std::string str() const;

private:
    long long v_ = 0; // -1 encodes infinity
};

struct TorsionComponent {
    Int p;                 // prime
    long long exponent;    // i >= 1, summand Z_{p^i}
    long long multiplicity; // c(p^i) >= 1
    bool operator==(const TorsionComponent&) const = default;
};

// Finitely generated abelian group: rank plus prime-power torsion multiset,
// kept sorted by (p, exponent) with multiplicities merged.
struct FinAbGroup {
    long long rank = 0;
    std::vector<TorsionComponent> torsion;

    static FinAbGroup free_part(long long rank);
    static FinAbGroup make(long long rank, std::vector<TorsionComponent> torsion);

    void canonicalize();
    void validate() const;

    long long multiplicity(const Int& p, long long exponent) const;
    bool torsion_free() const { return torsion.empty(); }
    FinAbGroup direct_sum(const FinAbGroup& other) const;

    // Invariant factor decomposition k_1 | k_2 | ... (each > 1, ascending).
    std::vector<Int> invariant_factors() const;

    std::string str() const; // e.g. "Z^2 + Z_2^2 + Z_8"
    bool operator==(const FinAbGroup&) const = default;
};

struct Manifold5 {
    FinAbGroup h2;
    BardenIndex barden;

    // barden must lie in {0, inf} or be an exponent j with c(2^j) != 0;
    // infinity needs rank >= 1.
    void validate() const;
    bool operator==(const Manifold5&) const = default;
};

// Canonical name X_head # M_{k_1} # ... # M_{k_s} # (copies of S^2 x S^3).
struct BardenName {
    enum class Head { XMinus1, X0, Xj, XInf };

    Head head = Head::X0;
    long long head_j = 0;          // for Head::Xj
    std::vector<Int> finite_ks;    // k_1 | k_2 | ..., each > 1
    long long infinite_count = 0;  // number of M_inf = S^2 x S^3 summands

    std::string str() const;
    bool operator==(const BardenName&) const = default;
};

// Unique canonical name of a valid manifold.  Throws InvalidBardenInvariant
// when (H_2, i) is not realizable by any name.
BardenName classify(const Manifold5& m);

// Recover (H_2, i) from a name; inverse of classify.
Manifold5 to_manifold(const BardenName& name);

// Descriptor-level connected sum: H_2 adds, the invariant combines as 0 when
// both are 0 and otherwise as the minimum of the nonzero values.
Manifold5 connected_sum(const Manifold5& a, const Manifold5& b);

struct ToricWitness {
    bool admits = false;
    std::string name; // matching entry of the admissible list when admits
};

// True exactly when H_2 is torsion-free and the invariant is 0 or infinity.
ToricWitness admits_toric_sasakian(const Manifold5& m);

} // namespace sasaki
