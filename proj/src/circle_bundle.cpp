#include "sasaki/circle_bundle.hpp"

namespace sasaki {

TotalSpaceReport total_space(const BundleSpec& spec) {
    return total_space(spec, SnfPivot::Canonical, 0);
}

TotalSpaceReport total_space(const BundleSpec& spec, SnfPivot pivot, unsigned seed) {
    const std::size_t r = spec.base_lattice.rank;
    if (spec.euler.size() != r || spec.c1_base.size() != r)
        fail("circle_bundle", "DimensionMismatch", "classes must match the lattice rank");
    if (spec.euler.is_zero())
        fail("circle_bundle", "ZeroEuler", "the Euler class must be nonzero");

    QuotientLattice q = quotient_by_vector(r, spec.euler, pivot, seed);

    TotalSpaceReport rep;
    rep.pi1_order = spec.euler.content();
    rep.b2 = q.rank;
    if (q.rank > 0) {
        rep.c1D = q.free_projection() * spec.c1_base;
        rep.c1D.basis_label = "quotient";
        rep.w2 = mod2(rep.c1D);
        rep.spin = rep.w2.is_zero();
    } else {
        rep.spin = true; // H^2 of the total space vanishes
    }

    // Primitive Euler class over a simply connected base: the total space is
    // a simply connected 5-manifold with torsion-free H_2.
    if (spec.base_simply_connected && rep.pi1_order == 1) {
        Manifold5 m{FinAbGroup::free_part(static_cast<long long>(rep.b2)),
                    rep.spin ? BardenIndex::finite(0) : BardenIndex::infinity()};
        rep.diffeo = classify(m);
        rep.m5 = std::move(m);
    }
    return rep;
}

WangZillerReport wang_ziller(long long p1, long long p2, const Int& k1, const Int& k2) {
    if (p1 < 1 || p2 < 1)
        fail("circle_bundle", "InvalidParameters", "Wang-Ziller needs p1, p2 >= 1");
    if (k1 < 1 || k2 < 1)
        fail("circle_bundle", "InvalidParameters", "Wang-Ziller needs k1, k2 >= 1");

    WangZillerReport r;
    r.p1 = p1;
    r.p2 = p2;
    r.k1 = k1;
    r.k2 = k2;
    r.dim = 2 * (p1 + p2) + 1;
    r.c1D = k2 * Int(p1 + 1) - k1 * Int(p2 + 1);
    Int w = k2 * Int(p1 + 1) + k1 * Int(p2 + 1);
    r.w2 = static_cast<int>(w % 2);
    r.spin = r.w2 == 0;
    r.pi1_order = gcd(k1, k2);
    r.simply_connected = r.pi1_order == 1;

    if (r.simply_connected && p1 == 1 && p2 == 1)
        r.name = r.spin ? "S2xS3" : "X_inf"; // dimension five
    else if (r.simply_connected && p1 == 1 && k2 == 1) {
        // S^{2p2+1}-bundle over S^2: two such bundles, split by w2.
        std::string fibre = "S" + std::to_string(2 * p2 + 1);
        r.name = r.spin ? "S2x" + fibre : "nontrivial " + fibre + "-bundle over S2";
    }
    return r;
}

AbBasis ab_basis(const Int& l1, const Int& l2, const Int& m) {
    if (l1 < 1 || l2 < 1 || m < 0)
        fail("circle_bundle", "InvalidParameters", "ab_basis needs l1, l2 >= 1 and m >= 0");
    AbBasis r;
    r.a1 = l1 * m + l2;
    r.a2 = l1;
    // a1 > m a2 > 0 as stated; at m = 0 the second leg degenerates to the
    // equivalent Kaehler-cone condition a2 > 0.
    r.positive = r.a1 > m * r.a2 && r.a2 > 0;
    r.c1D = 2 * (r.a1 - r.a2);
    return r;
}

LermanCount lerman_count(const Int& a1, const Int& a2) {
    if (a1 < 1 || a2 < 1)
        fail("circle_bundle", "InvalidParameters", "lerman_count needs positive integers");
    if (gcd(a1, a2) != 1)
        fail("circle_bundle", "InvalidParameters", "lerman_count needs coprime integers");
    LermanCount r;
    r.count = (a2 + a1 - 1) / a1; // ceil(a2 / a1)
    r.suspect_inverted = a1 > a2;
    return r;
}

HirzebruchBundleReport hirzebruch_bundle(long long n, const Int& l1, const Int& l2) {
    if (n < 0) fail("circle_bundle", "InvalidParameters", "Hirzebruch parameter must be >= 0");
    if (l1 < 1 || l2 < 1)
        fail("circle_bundle", "InvalidParameters", "Euler coefficients must be positive");

    HirzebruchBundleReport rep;
    rep.n = n;
    rep.l1 = l1;
    rep.l2 = l2;
    rep.c1D_closed = -(2 * l2 - l1 * (2 - Int(n)));

    BundleSpec spec;
    spec.base_lattice = {2, ToricSurface::hirzebruch(n).cfe_gram()};
    spec.c1_base = IntVec({Int(2), -(Int(n) - 2)}, "cfe");
    spec.euler = IntVec({l1, l2}, "cfe");
    TotalSpaceReport t = total_space(spec);

    rep.c1D_lattice = t.c1D;
    rep.abs_agree = abs(rep.c1D_closed) == abs(t.c1D[0]);
    rep.parity_agree = ((rep.c1D_closed - t.c1D[0]) % 2) == 0;
    rep.spin = t.spin;
    rep.pi1_order = t.pi1_order;
    if (t.diffeo) rep.name = t.diffeo->str();
    return rep;
}

ToricSurface blowup_surface(long long n, long long k) {
    ToricSurface s = ToricSurface::hirzebruch(n);
    for (long long i = 0; i < k; ++i)
        s = s.blown_up(static_cast<std::size_t>(i) % s.fan().size());
    return s;
}

BlowupBundleReport blowup_bundle(long long n, long long k, const Int& l2) {
    if (n < 0 || k < 0)
        fail("circle_bundle", "InvalidParameters", "blowup_bundle needs n, k >= 0");
    ToricSurface s = blowup_surface(n, k);
    DivisorClass euler = s.special_class(l2);
    DivisorClass c1 = s.anticanonical();

    BlowupBundleReport rep;
    rep.n = n;
    rep.k = k;
    rep.l2 = l2;
    rep.square = s.square(*euler.cfe);
    rep.square_positive = rep.square > 0;

    BundleSpec spec;
    spec.base_lattice = {s.b2(), s.cfe_gram()};
    spec.c1_base = *c1.cfe;
    spec.euler = *euler.cfe;
    TotalSpaceReport t = total_space(spec);

    rep.b2 = t.b2;
    rep.spin = t.spin;
    rep.closed_form_w2 = static_cast<int>(n % 2);
    rep.methods_agree = rep.spin == (rep.closed_form_w2 == 0);
    rep.name = t.diffeo ? t.diffeo->str() : "";

    // Alternative count with one fewer trivial summand, as this family is
    // sometimes quoted: k summands split by the parity of n.
    if (k >= 1) {
        Manifold5 alt{FinAbGroup::free_part(k),
                      n % 2 == 0 ? BardenIndex::finite(0) : BardenIndex::infinity()};
        rep.name_alt = classify(alt).str();
    } else {
        rep.name_alt = rep.name;
    }
    return rep;
}

} // namespace sasaki
