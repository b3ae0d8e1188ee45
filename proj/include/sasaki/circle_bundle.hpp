#pragma once

#include <optional>
#include <string>

#include "sasaki/exact_lattice.hpp"
#include "sasaki/smale_barden.hpp"
#include "sasaki/toric_surface.hpp"

// Invariants of circle bundles over simply connected surfaces: b2, c1 of the
// contact bundle, w2 and Smale-Barden type, via both closed forms and the
// lattice-quotient pipeline.

namespace sasaki {

// Free abelian group with a symmetric integer pairing.
struct IntersectionLattice {
    std::size_t rank = 0;
    IntMatrix gram;
};

struct BundleSpec {
    IntersectionLattice base_lattice;
    IntVec c1_base; // first Chern class of the base, in the lattice basis
    IntVec euler;   // Euler (transgression) class of the bundle, nonzero
    bool base_simply_connected = true;
};

struct TotalSpaceReport {
    std::size_t b2 = 0;            // rank of the quotient
    IntVec c1D;                    // c1 of the contact bundle, free quotient coordinates
    IntVec w2;                     // c1D mod 2
    bool spin = false;             // w2 == 0
    Int pi1_order;                 // gcd of the Euler entries
    std::optional<Manifold5> m5;   // assembled when pi1 = 1 over a simply connected base
    std::optional<BardenName> diffeo;
};

// Quotient pipeline: project c1 along Z^r / <euler> and reduce mod 2.
TotalSpaceReport total_space(const BundleSpec& spec);
TotalSpaceReport total_space(const BundleSpec& spec, SnfPivot pivot, unsigned seed);

// S^{2p1+1} * S^{2p2+1} joins: circle bundles over CP^{p1} x CP^{p2} with
// Euler class k1 w1 + k2 w2.
struct WangZillerReport {
    long long p1 = 1, p2 = 1;
    Int k1, k2;
    long long dim = 5;               // 2(p1+p2)+1
    Int c1D;                         // k2(p1+1) - k1(p2+1), closed form
    int w2 = 0;                      // parity of k2(p1+1) + k1(p2+1)
    bool spin = false;
    bool simply_connected = false;   // gcd(k1,k2) = 1
    Int pi1_order;
    std::optional<std::string> name; // diffeomorphism or bundle type when known
};

WangZillerReport wang_ziller(long long p1, long long p2, const Int& k1, const Int& k2);

// Basis change on S_{2m}: a1 = l1 m + l2, a2 = l1, with c1(D) = 2(a1 - a2).
struct AbBasis {
    Int a1, a2;
    bool positive; // a1 > m a2 and a2 > 0
    Int c1D;
};

AbBasis ab_basis(const Int& l1, const Int& l2, const Int& m);

// ceil(a2 / a1) regular toric Sasakian structures per contact form, stated
// verbatim; `suspect_inverted` marks inputs with a1 > a2, where the stated
// positivity regime makes the verbatim fraction collapse to 1 and the
// direction of the ratio looks reversed.
struct LermanCount {
    Int count;
    bool suspect_inverted = false;
};

LermanCount lerman_count(const Int& a1, const Int& a2);

// Bundle over the Hirzebruch surface S_n with Euler class l1 C + l2 F,
// computed by closed form and by the quotient pipeline side by side.
struct HirzebruchBundleReport {
    long long n = 0;
    Int l1, l2;
    Int c1D_closed;                // -[2 l2 - l1 (2 - n)]
    IntVec c1D_lattice;            // rank-1 quotient coordinate
    bool abs_agree = false;        // |closed| == |lattice| (generator sign free)
    bool parity_agree = false;
    bool spin = false;
    Int pi1_order;
    std::optional<std::string> name; // S2xS3 / X_inf when simply connected
};

HirzebruchBundleReport hirzebruch_bundle(long long n, const Int& l1, const Int& l2);

// Bundle over the k-fold blow-up S_{n,k} with Euler class C + l2 F - sum E_i.
struct BlowupBundleReport {
    long long n = 0, k = 0;
    Int l2;
    Int square;              // 2 l2 + n - k
    bool square_positive = false;
    std::size_t b2 = 0;      // k + 1
    bool spin = false;       // via the quotient pipeline
    int closed_form_w2 = 0;  // n mod 2, the closed-form parity for this family
    bool methods_agree = false; // pipeline vs closed form
    std::string name;        // from the computed invariants (b2 summands)
    std::string name_alt;    // same family quoted with one fewer trivial summand
};

// Corners are chosen round-robin; the (C,F,E) classes do not depend on them.
BlowupBundleReport blowup_bundle(long long n, long long k, const Int& l2);

// The surface S_{n,k} with round-robin corner blow-ups, shared by the report
// and the sweep drivers.
ToricSurface blowup_surface(long long n, long long k);

} // namespace sasaki
