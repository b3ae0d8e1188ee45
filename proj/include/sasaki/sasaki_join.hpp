#pragma once

#include <map>
#include <optional>
#include <string>

#include "sasaki/exact_lattice.hpp"

// Symbolic join calculus on quasi-regular Sasakian descriptors: weighted
// joins, smoothness and type propagation, relative indices and the
// eta-Einstein join.

namespace sasaki {

enum class SasakiTypeClass { Positive, Negative, Null, Indefinite, Undetermined };
enum class Regularity { Regular, QuasiRegular };

const char* to_string(SasakiTypeClass t);
const char* to_string(Regularity r);

struct SasakiDescriptor {
    long long n = 0;                      // transverse complex dimension; dim = 2n+1
    std::optional<Int> order;             // lcm of leaf holonomy orders; absent = undetermined
    std::optional<Int> index;             // divisibility index; definite types only
    SasakiTypeClass stype = SasakiTypeClass::Undetermined;
    Regularity regularity = Regularity::QuasiRegular;
    bool smooth = true;
    std::optional<bool> simply_connected; // absent = unknown
    std::optional<long long> toric_rank;  // rank of an effective torus of Reeb type
    bool eta_einstein = false;
    std::string label;

    long long dimension() const { return 2 * n + 1; }
    bool definite() const {
        return stype == SasakiTypeClass::Positive || stype == SasakiTypeClass::Negative;
    }
    void validate() const;

    // Field-wise equality ignoring the provenance label.
    bool same_invariants(const SasakiDescriptor& o) const;
};

struct KNormalization {
    Int k1, k2; // coprime
    Int m;      // gcd of the requested pair
};

// (k1, k2) -> (k1/m, k2/m, m).
KNormalization normalize_k(const Int& k1, const Int& k2);

struct JoinResult {
    SasakiDescriptor descriptor;
    Int k1 = 1, k2 = 1;     // normalized weights, coprime
    Int quotient_order = 1; // m; the join is the Z_m quotient of the coprime join
    std::string fibre_view; // associated-bundle picture of the result
};

// Weighted join of two descriptors.  Weights are normalized first; when the
// requested pair has gcd m > 1 the result records the Z_m quotient and is not
// simply connected.  A factor with n = 0 acts as the identity and only
// accepts weights (1, 1).
JoinResult join(const SasakiDescriptor& s1, const SasakiDescriptor& s2,
                const Int& k1, const Int& k2);

struct RelativeIndices {
    Int l1, l2; // I_i / gcd(I_1, I_2), coprime
};

RelativeIndices relative_indices(const Int& i1, const Int& i2);

// Join at the relative indices of two definite eta-Einstein structures of the
// same type; the result carries an eta-Einstein structure of that type and,
// when smooth, is indivisible (index 1).
JoinResult eta_einstein_join(const SasakiDescriptor& s1, const SasakiDescriptor& s2);

// Built-in descriptors.
SasakiDescriptor sphere_preset(long long p);      // round S^{2p+1}, p >= 1
SasakiDescriptor identity_circle_preset();        // n = 0, the join identity
SasakiDescriptor heisenberg_preset(long long n);  // nilmanifold N_{2n+1}, n >= 1

// Named fixed presets: S1, S3, S5, S7, S9, N3, N5, N7.  Brieskorn links are
// built separately from their exponents (see brieskorn.hpp).
std::map<std::string, SasakiDescriptor> presets();

} // namespace sasaki
