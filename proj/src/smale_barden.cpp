#include "sasaki/smale_barden.hpp"

#include <algorithm>
#include <map>

namespace sasaki {

BardenIndex BardenIndex::finite(long long j) {
    if (j < 0) fail("smale_barden", "InvalidBardenInvariant", "finite Barden value must be >= 0");
    BardenIndex b;
    b.v_ = j;
    return b;
}

BardenIndex BardenIndex::infinity() {
    BardenIndex b;
    b.v_ = -1;
    return b;
}

long long BardenIndex::value() const {
    if (is_infinite())
        fail("smale_barden", "InvalidBardenInvariant", "infinite Barden invariant has no finite value");
    return v_;
}

bool BardenIndex::operator<(const BardenIndex& o) const {
    if (is_infinite()) return false;
    if (o.is_infinite()) return true;
    return v_ < o.v_;
}

std::string BardenIndex::str() const { return is_infinite() ? "inf" : std::to_string(v_); }

namespace {

bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Int pow_int(const Int& p, long long e) {
    Int r = 1;
    for (long long i = 0; i < e; ++i) r *= p;
    return r;
}

} // namespace

FinAbGroup FinAbGroup::free_part(long long rank) { return make(rank, {}); }

FinAbGroup FinAbGroup::make(long long rank, std::vector<TorsionComponent> torsion) {
    FinAbGroup g{rank, std::move(torsion)};
    g.canonicalize();
    g.validate();
    return g;
}

void FinAbGroup::canonicalize() {
    std::map<std::pair<Int, long long>, long long> merged;
    for (const auto& t : torsion) merged[{t.p, t.exponent}] += t.multiplicity;
    torsion.clear();
    for (const auto& [key, c] : merged) torsion.push_back({key.first, key.second, c});
}

void FinAbGroup::validate() const {
    if (rank < 0) fail("smale_barden", "InvalidGroup", "negative rank");
    for (const auto& t : torsion) {
        if (!is_prime(t.p))
            fail("smale_barden", "InvalidGroup", "torsion base " + t.p.str() + " is not prime");
        if (t.exponent < 1) fail("smale_barden", "InvalidGroup", "torsion exponent must be >= 1");
        if (t.multiplicity < 1) fail("smale_barden", "InvalidGroup", "torsion multiplicity must be >= 1");
    }
    for (std::size_t i = 1; i < torsion.size(); ++i) {
        const auto &a = torsion[i - 1], &b = torsion[i];
        if (!(a.p < b.p || (a.p == b.p && a.exponent < b.exponent)))
            fail("smale_barden", "InvalidGroup", "torsion components not canonically ordered");
    }
}

long long FinAbGroup::multiplicity(const Int& p, long long exponent) const {
    for (const auto& t : torsion)
        if (t.p == p && t.exponent == exponent) return t.multiplicity;
    return 0;
}

FinAbGroup FinAbGroup::direct_sum(const FinAbGroup& other) const {
    std::vector<TorsionComponent> all = torsion;
    all.insert(all.end(), other.torsion.begin(), other.torsion.end());
    return make(rank + other.rank, std::move(all));
}

std::vector<Int> FinAbGroup::invariant_factors() const {
    // For each prime list its exponents in descending order with multiplicity;
    // the s-th largest of every prime multiply into the s-th largest factor.
    std::map<Int, std::vector<long long>> exps;
    for (const auto& t : torsion)
        for (long long c = 0; c < t.multiplicity; ++c) exps[t.p].push_back(t.exponent);
    std::size_t depth = 0;
    for (auto& [p, v] : exps) {
        std::sort(v.rbegin(), v.rend());
        depth = std::max(depth, v.size());
    }
    std::vector<Int> factors(depth, Int(1));
    for (const auto& [p, v] : exps)
        for (std::size_t s = 0; s < v.size(); ++s) factors[s] *= pow_int(p, v[s]);
    std::reverse(factors.begin(), factors.end()); // ascending divisibility chain
    return factors;
}

std::string FinAbGroup::str() const {
    std::string s;
    if (rank > 0) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
    for (const auto& t : torsion) {
        if (!s.empty()) s += " + ";
        s += "Z_" + pow_int(t.p, t.exponent).str();
        if (t.multiplicity > 1) s += "^" + std::to_string(t.multiplicity);
    }
    return s.empty() ? "0" : s;
}

void Manifold5::validate() const {
    h2.validate();
    if (barden.is_infinite()) {
        if (h2.rank < 1)
            fail("smale_barden", "InvalidBardenInvariant",
                 "barden = inf needs an infinite-order class (rank >= 1)");
        return;
    }
    long long j = barden.value();
    if (j == 0) return;
    if (h2.multiplicity(2, j) == 0)
        fail("smale_barden", "InvalidBardenInvariant",
             "barden = " + std::to_string(j) + " needs a Z_{2^" + std::to_string(j) + "} summand");
}

std::string BardenName::str() const {
    std::vector<std::string> parts;
    switch (head) {
    case Head::XMinus1: parts.push_back("X_-1"); break;
    case Head::X0: break; // trivial head is silent unless the name is just S^5
    case Head::Xj: parts.push_back("X_" + std::to_string(head_j)); break;
    case Head::XInf: parts.push_back("X_inf"); break;
    }
    for (const Int& k : finite_ks) parts.push_back("M_" + k.str());
    if (infinite_count == 1) parts.push_back("S2xS3");
    else if (infinite_count > 1) parts.push_back(std::to_string(infinite_count) + "(S2xS3)");
    if (parts.empty()) return "S5";
    std::string s = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) s += "#" + parts[i];
    return s;
}

BardenName classify(const Manifold5& m) {
    m.validate();

    // The realizable groups are T + T, or Z_2 + T + T with invariant 1:
    // every prime-power multiplicity is even except possibly c(2).
    std::map<std::pair<Int, long long>, long long> c;
    for (const auto& t : m.h2.torsion) c[{t.p, t.exponent}] = t.multiplicity;

    for (const auto& [key, mult] : c)
        if (mult % 2 != 0 && key != std::pair<Int, long long>{2, 1})
            fail("smale_barden", "InvalidBardenInvariant",
                 "torsion " + key.first.str() + "^" + std::to_string(key.second) +
                     " has odd multiplicity; no such simply connected 5-manifold");

    BardenName name;
    const bool odd_c2 = c.count({2, 1}) && c[{2, 1}] % 2 != 0;
    if (odd_c2) {
        if (m.barden != BardenIndex::finite(1))
            fail("smale_barden", "InvalidBardenInvariant",
                 "a lone Z_2 summand forces Barden invariant 1");
        name.head = BardenName::Head::XMinus1;
        if (--c[{2, 1}] == 0) c.erase({2, 1});
    } else if (m.barden.is_infinite()) {
        name.head = BardenName::Head::XInf;
    } else if (m.barden.value() == 0) {
        name.head = BardenName::Head::X0;
    } else {
        long long j = m.barden.value();
        if (c[{2, j}] < 2)
            fail("smale_barden", "InvalidBardenInvariant",
                 "barden = " + std::to_string(j) + " needs two Z_{2^j} summands here");
        name.head = BardenName::Head::Xj;
        name.head_j = j;
        if ((c[{2, j}] -= 2) == 0) c.erase({2, j});
    }

    // Remaining torsion halves into one group T; its invariant factors are
    // the finite connected-sum labels.
    std::vector<TorsionComponent> half;
    for (const auto& [key, mult] : c) {
        if (mult % 2 != 0)
            fail("smale_barden", "InvalidBardenInvariant", "torsion does not pair into squares");
        if (mult / 2 > 0) half.push_back({key.first, key.second, mult / 2});
    }
    name.finite_ks = FinAbGroup::make(0, std::move(half)).invariant_factors();
    name.infinite_count = m.h2.rank - (name.head == BardenName::Head::XInf ? 1 : 0);
    return name;
}

Manifold5 to_manifold(const BardenName& name) {
    FinAbGroup h2 = FinAbGroup::free_part(name.infinite_count);
    BardenIndex barden = BardenIndex::finite(0);

    switch (name.head) {
    case BardenName::Head::XMinus1:
        h2 = h2.direct_sum(FinAbGroup::make(0, {{2, 1, 1}}));
        barden = BardenIndex::finite(1);
        break;
    case BardenName::Head::X0:
        break;
    case BardenName::Head::Xj:
        h2 = h2.direct_sum(FinAbGroup::make(0, {{2, name.head_j, 2}}));
        barden = BardenIndex::finite(name.head_j);
        break;
    case BardenName::Head::XInf:
        h2 = h2.direct_sum(FinAbGroup::free_part(1));
        barden = BardenIndex::infinity();
        break;
    }

    for (const Int& k : name.finite_ks) {
        if (k < 2) fail("smale_barden", "InvalidGroup", "summand label must be > 1");
        // factor k into prime powers; M_k contributes Z_k + Z_k
        Int rest = k;
        std::vector<TorsionComponent> comps;
        for (Int p = 2; p * p <= rest; ++p) {
            if (rest % p != 0) continue;
            long long e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            comps.push_back({p, e, 2});
        }
        if (rest > 1) comps.push_back({rest, 1, 2});
        h2 = h2.direct_sum(FinAbGroup::make(0, std::move(comps)));
    }

    Manifold5 m{h2, barden};
    m.validate();
    return m;
}

Manifold5 connected_sum(const Manifold5& a, const Manifold5& b) {
    a.validate();
    b.validate();
    BardenIndex i;
    const bool a0 = a.barden == BardenIndex::finite(0);
    const bool b0 = b.barden == BardenIndex::finite(0);
    if (a0 && b0) i = BardenIndex::finite(0);
    else if (a0) i = b.barden;
    else if (b0) i = a.barden;
    else i = a.barden < b.barden ? a.barden : b.barden;
    return Manifold5{a.h2.direct_sum(b.h2), i};
}

ToricWitness admits_toric_sasakian(const Manifold5& m) {
    m.validate();
    if (!m.h2.torsion_free()) return {false, ""};
    if (!m.barden.is_infinite() && m.barden.value() != 0) return {false, ""};
    return {true, classify(m).str()};
}

} // namespace sasaki
