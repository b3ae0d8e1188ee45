#include "sasaki/brieskorn.hpp"

#include <fstream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sasaki {

ExponentVector::ExponentVector(std::array<Int, 4> exps) : a(std::move(exps)) {
    for (const Int& x : a)
        if (x < 1)
            fail("brieskorn", "InvalidExponent", "exponents must be positive integers");
}

std::string ExponentVector::str() const {
    return "(" + a[0].str() + "," + a[1].str() + "," + a[2].str() + "," + a[3].str() + ")";
}

Int fano_index(const ExponentVector& a) {
    Int l = 1;
    for (const Int& x : a.a) l = lcm(l, x);
    Int s = 0;
    for (const Int& x : a.a) s += l / x; // exact: x | lcm
    return s - l;
}

S3JoinReport s3_join(const ExponentVector& a, const Int& order_v2) {
    if (order_v2 < 1)
        fail("brieskorn", "InvalidOrder", "the structure order must be a positive integer");
    Int index = fano_index(a);
    if (index < 1)
        fail("brieskorn", "NonPositiveIndex",
             "link " + a.str() + " has index " + index.str() + "; the S^3 join needs index >= 1");

    const auto [l1, l2] = relative_indices(Int(2), index);
    S3JoinReport r;
    r.index = index;
    r.l1 = l1;
    r.l2 = l2;
    r.fibre = "L5(" + l2.str() + ")";
    r.h4_torsion = l2;
    r.homeo_s2xs5 = l2 == 1;
    r.smooth = gcd(l2, order_v2) == 1;
    return r;
}

SasakiDescriptor brieskorn_sphere_preset(const ExponentVector& a, const Int& order,
                                         bool eta_einstein) {
    if (order < 1)
        fail("brieskorn", "InvalidOrder", "the structure order must be a positive integer");
    Int index = fano_index(a);
    SasakiDescriptor d;
    d.n = 2;
    d.order = order;
    if (index > 0) {
        d.stype = SasakiTypeClass::Positive;
        d.index = index;
    } else if (index < 0) {
        d.stype = SasakiTypeClass::Negative;
        d.index = -index;
    } else {
        d.stype = SasakiTypeClass::Null;
    }
    d.regularity = order == 1 ? Regularity::Regular : Regularity::QuasiRegular;
    d.smooth = true;
    d.simply_connected = true;
    d.eta_einstein = eta_einstein;
    d.label = "S5_w" + a.str();
    return d;
}

Census index_census(const std::vector<ExponentVector>& batch, bool parallel) {
    std::vector<Int> indices(batch.size());
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (long long i = 0; i < static_cast<long long>(batch.size()); ++i)
            indices[i] = fano_index(batch[i]);
    } else {
        for (std::size_t i = 0; i < batch.size(); ++i) indices[i] = fano_index(batch[i]);
    }
    Census c;
    c.total = batch.size();
    for (const Int& v : indices) ++c.histogram[v];
    return c;
}

std::vector<ExponentVector> parse_exponent_lines(std::istream& in) {
    std::vector<ExponentVector> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<Int> vals;
        std::string tok;
        while (ls >> tok) {
            try {
                vals.emplace_back(tok);
            } catch (const std::exception&) {
                fail("brieskorn", "ParseError",
                     "line " + std::to_string(lineno) + ": '" + tok + "' is not an integer");
            }
        }
        if (vals.empty()) continue; // blank or comment-only line
        if (vals.size() != 4)
            fail("brieskorn", "ParseError",
                 "line " + std::to_string(lineno) + ": expected 4 exponents, got " +
                     std::to_string(vals.size()));
        for (const Int& v : vals)
            if (v < 1)
                fail("brieskorn", "ParseError",
                     "line " + std::to_string(lineno) + ": exponents must be >= 1");
        out.push_back(ExponentVector({vals[0], vals[1], vals[2], vals[3]}));
    }
    return out;
}

std::vector<ExponentVector> load_exponent_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail("brieskorn", "FileNotFound", "cannot open exponent file '" + path + "'");
    return parse_exponent_lines(in);
}

} // namespace sasaki
