#include "sasaki/sasaki_join.hpp"

namespace sasaki {

const char* to_string(SasakiTypeClass t) {
    switch (t) {
    case SasakiTypeClass::Positive: return "positive";
    case SasakiTypeClass::Negative: return "negative";
    case SasakiTypeClass::Null: return "null";
    case SasakiTypeClass::Indefinite: return "indefinite";
    case SasakiTypeClass::Undetermined: return "undetermined";
    }
    return "undetermined";
}

const char* to_string(Regularity r) {
    return r == Regularity::Regular ? "regular" : "quasi-regular";
}

void SasakiDescriptor::validate() const {
    if (n < 0) fail("sasaki_join", "InvalidDescriptor", "transverse dimension must be >= 0");
    if (order && *order < 1)
        fail("sasaki_join", "InvalidDescriptor", "order must be a positive integer");
    if (regularity == Regularity::Regular && order && *order != 1)
        fail("sasaki_join", "InvalidDescriptor", "a regular structure has order 1");
    if (index && !definite())
        fail("sasaki_join", "InvalidDescriptor", "index is defined only for definite types");
    if (index && *index < 1)
        fail("sasaki_join", "InvalidDescriptor", "index must be a positive integer");
}

bool SasakiDescriptor::same_invariants(const SasakiDescriptor& o) const {
    return n == o.n && order == o.order && index == o.index && stype == o.stype &&
           regularity == o.regularity && smooth == o.smooth &&
           simply_connected == o.simply_connected && toric_rank == o.toric_rank &&
           eta_einstein == o.eta_einstein;
}

KNormalization normalize_k(const Int& k1, const Int& k2) {
    if (k1 < 1 || k2 < 1)
        fail("sasaki_join", "InvalidWeights", "join weights must be positive integers");
    Int m = gcd(k1, k2);
    return {k1 / m, k2 / m, m};
}

JoinResult join(const SasakiDescriptor& s1, const SasakiDescriptor& s2,
                const Int& k1, const Int& k2) {
    s1.validate();
    s2.validate();
    if (k1 < 1 || k2 < 1)
        fail("sasaki_join", "InvalidWeights", "join weights must be positive integers");

    if (s1.n == 0 || s2.n == 0) {
        if (k1 != 1 || k2 != 1)
            fail("sasaki_join", "IdentityMisuse",
                 "the identity circle joins only with weights (1, 1)");
        JoinResult r;
        r.descriptor = s1.n == 0 ? s2 : s1;
        r.fibre_view = "identity join";
        return r;
    }

    if (!s1.order || !s2.order)
        fail("sasaki_join", "UnknownOrder",
             "smoothness of a join needs the orders of both factors");

    const auto [n1, n2, m] = normalize_k(k1, k2);
    const Int &v1 = *s1.order, &v2 = *s2.order;

    // Smoothness criterion for the coprime pair.  A quotient by Z_{m > 1} is
    // a genuine circle bundle (hence still smooth and regular) when both
    // factors are regular; for quasi-regular factors the freeness of the
    // residual Z_m action is not determined by the descriptor data, so the
    // quotient is reported as an orbifold.
    const bool smooth_cover = gcd(v1 * n2, v2 * n1) == 1;
    const bool both_regular =
        s1.regularity == Regularity::Regular && s2.regularity == Regularity::Regular;
    const bool smooth = smooth_cover && (m == 1 || both_regular);

    SasakiDescriptor d;
    d.n = s1.n + s2.n;
    d.smooth = smooth;
    d.regularity = (both_regular && smooth) ? Regularity::Regular : Regularity::QuasiRegular;
    if (d.regularity == Regularity::Regular) d.order = Int(1);

    if (s1.stype == s2.stype &&
        (s1.stype == SasakiTypeClass::Positive || s1.stype == SasakiTypeClass::Negative ||
         s1.stype == SasakiTypeClass::Null))
        d.stype = s1.stype;
    else
        d.stype = SasakiTypeClass::Undetermined;

    if (m > 1) d.simply_connected = false;

    // A torus of full Reeb rank on each factor assembles to one on the join.
    if (s1.toric_rank == s1.n + 1 && s2.toric_rank == s2.n + 1)
        d.toric_rank = d.n + 1;

    d.label = "(" + s1.label + " *_{" + n1.str() + "," + n2.str() + "} " + s2.label + ")";

    JoinResult r;
    r.descriptor = std::move(d);
    r.k1 = n1;
    r.k2 = n2;
    r.quotient_order = m;
    r.fibre_view = "fibre " + s2.label + "/Z_" + n2.str() + " over the quotient of " + s1.label;
    return r;
}

RelativeIndices relative_indices(const Int& i1, const Int& i2) {
    if (i1 < 1 || i2 < 1)
        fail("sasaki_join", "InvalidIndex", "relative indices need positive indices");
    Int g = gcd(i1, i2);
    return {i1 / g, i2 / g};
}

JoinResult eta_einstein_join(const SasakiDescriptor& s1, const SasakiDescriptor& s2) {
    s1.validate();
    s2.validate();
    if (!s1.definite() || !s2.definite() || s1.stype != s2.stype)
        fail("sasaki_join", "TypeMismatch",
             "eta-Einstein join needs two definite structures of the same type");
    if (!s1.index || !s2.index)
        fail("sasaki_join", "TypeMismatch", "eta-Einstein join needs both indices");
    if (!s1.eta_einstein || !s2.eta_einstein)
        fail("sasaki_join", "TypeMismatch", "both factors must carry eta-Einstein structures");

    const auto [l1, l2] = relative_indices(*s1.index, *s2.index);
    JoinResult r = join(s1, s2, l1, l2);
    r.descriptor.eta_einstein = true;
    if (r.descriptor.smooth) {
        r.descriptor.index = Int(1); // the join at relative indices is indivisible
        if (s1.stype == SasakiTypeClass::Positive) r.descriptor.simply_connected = true;
    }
    return r;
}

SasakiDescriptor sphere_preset(long long p) {
    if (p < 1) fail("sasaki_join", "InvalidDescriptor", "sphere preset needs p >= 1");
    SasakiDescriptor d;
    d.n = p;
    d.order = Int(1);
    d.index = Int(p + 1);
    d.stype = SasakiTypeClass::Positive;
    d.regularity = Regularity::Regular;
    d.smooth = true;
    d.simply_connected = true;
    d.toric_rank = p + 1;
    d.eta_einstein = true; // the round structure is Sasaki-Einstein
    d.label = "S^" + std::to_string(2 * p + 1);
    return d;
}

SasakiDescriptor identity_circle_preset() {
    SasakiDescriptor d;
    d.n = 0;
    d.order = Int(1);
    d.stype = SasakiTypeClass::Null; // the leaf space is a point
    d.regularity = Regularity::Regular;
    d.smooth = true;
    d.simply_connected = false;
    d.toric_rank = 1;
    d.label = "S^1";
    return d;
}

SasakiDescriptor heisenberg_preset(long long n) {
    if (n < 1) fail("sasaki_join", "InvalidDescriptor", "Heisenberg preset needs n >= 1");
    SasakiDescriptor d;
    d.n = n;
    d.order = Int(1);
    d.stype = SasakiTypeClass::Null; // circle bundle over an Abelian variety
    d.regularity = Regularity::Regular;
    d.smooth = true;
    d.simply_connected = false;
    d.eta_einstein = true;
    d.label = "N_" + std::to_string(2 * n + 1);
    return d;
}

std::map<std::string, SasakiDescriptor> presets() {
    std::map<std::string, SasakiDescriptor> m;
    m["S1"] = identity_circle_preset();
    for (long long p = 1; p <= 4; ++p) m["S" + std::to_string(2 * p + 1)] = sphere_preset(p);
    for (long long n = 1; n <= 3; ++n) m["N" + std::to_string(2 * n + 1)] = heisenberg_preset(n);
    return m;
}

} // namespace sasaki
