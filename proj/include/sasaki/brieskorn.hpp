#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sasaki/exact_lattice.hpp"
#include "sasaki/sasaki_join.hpp"

// Fano index of Brieskorn-Pham links of z_0^{a_0} + z_1^{a_1} + z_2^{a_2}
// + z_3^{a_3} and the S^3-join pipeline over them.

namespace sasaki {

struct ExponentVector {
    std::array<Int, 4> a;

    explicit ExponentVector(std::array<Int, 4> exps);
    bool operator==(const ExponentVector&) const = default;
    std::string str() const;
};

// lcm(a) * (sum 1/a_i - 1), always an exact integer; values <= 0 flag a
// non-Fano link and are returned as-is.
Int fano_index(const ExponentVector& a);

struct S3JoinReport {
    Int index;          // I of the link
    Int l1, l2;         // relative indices of (S^3, link); l2 = I / gcd(2, I)
    std::string fibre;  // lens space "L5(l2)"
    std::string base = "S2";
    Int h4_torsion;     // |H^4| = l2 (1 means trivial)
    bool homeo_s2xs5;   // exactly when l2 = 1
    bool smooth;        // gcd(l2, order) = 1; false marks an orbifold-only join
};

// Join the round S^3 with the link at their relative indices.  `order_v2` is
// the order of the link's Sasakian structure, supplied by the caller.
// Throws NonPositiveIndex when the link is not Fano.
S3JoinReport s3_join(const ExponentVector& a, const Int& order_v2);

// Descriptor for the link itself; order is caller-supplied.
SasakiDescriptor brieskorn_sphere_preset(const ExponentVector& a, const Int& order,
                                         bool eta_einstein = true);

struct Census {
    std::map<Int, long long> histogram; // index value -> count
    std::size_t total = 0;
};

// Exact index counts over a batch; cells are independent, so the batch may be
// evaluated in parallel, with a deterministic merged result either way.
Census index_census(const std::vector<ExponentVector>& batch, bool parallel = true);

// One vector per line, "a0 a1 a2 a3"; '#' starts a comment.  Parse errors
// carry the 1-based line number.
std::vector<ExponentVector> parse_exponent_lines(std::istream& in);
std::vector<ExponentVector> load_exponent_file(const std::string& path);

} // namespace sasaki
