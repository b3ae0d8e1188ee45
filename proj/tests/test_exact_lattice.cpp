#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sasaki/exact_lattice.hpp"
#include "test_util.hpp"

using namespace sasaki;

namespace {

bool divisibility_chain(const std::vector<Int>& d) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] < 0 || d[i + 1] < 0) return false;
        if (d[i] == 0 && d[i + 1] != 0) return false;
        if (d[i] != 0 && d[i + 1] % d[i] != 0) return false;
    }
    return true;
}

bool is_diagonal(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (i != j && m.at(i, j) != 0) return false;
    return true;
}

void check_snf_contract(const IntMatrix& a, const SnfResult& s) {
    CHECK(s.U * s.D * s.V == a);
    CHECK(is_diagonal(s.D));
    CHECK(divisibility_chain(s.diagonal()));
    CHECK(abs(det(s.U)) == 1);
    CHECK(abs(det(s.V)) == 1);
    CHECK(s.U * s.U_inv == IntMatrix::identity(a.rows));
    CHECK(s.V * s.V_inv == IntMatrix::identity(a.cols));
}

} // namespace

TEST_CASE("gcd and lcm") {
    CHECK(gcd(Int(0), Int(0)) == 0);
    CHECK(gcd(Int(-4), Int(6)) == 2);
    CHECK(lcm(Int(4), Int(6)) == 12);
}

TEST_CASE("mod2 reduces entrywise and ignores signs") {
    CHECK(mod2(IntVec({2, 4, 6})) == IntVec({0, 0, 0}));
    CHECK(mod2(IntVec({3, -1})) == IntVec({1, 1}));
    CHECK(mod2(mod2(IntVec({3, -1}))) == mod2(IntVec({3, -1})));

    // contact-class vector of a blown-up bundle with n odd: -(2 l2 + n - 2)
    // followed by -6 entries reduces to (1, 0, ..., 0), i.e. not spin
    Int n = 3, l2 = 5;
    IntVec c1({-(2 * l2 + n - 2), -6, -6, -6});
    CHECK(mod2(c1) == IntVec({1, 0, 0, 0}));
    CHECK_FALSE(mod2(c1).is_zero());
}

TEST_CASE("IntVec must be nonempty") {
    CHECK_THROWS_AS(IntVec(std::vector<Int>{}), DomainError);
}

TEST_CASE("snf of the identity is trivial") {
    IntMatrix id = IntMatrix::identity(2);
    SnfResult s = snf(id);
    CHECK(s.D == id);
    CHECK(s.U == id);
    CHECK(s.V == id);
}

TEST_CASE("snf of [[2,4],[6,8]]") {
    // Hand reduction: the entry gcd is 2 and |det| = 8, so D = diag(2, 4).
    IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
    SnfResult s = snf(a);
    CHECK(s.D == IntMatrix::from_rows({{2, 0}, {0, 4}}));
    check_snf_contract(a, s);
}

TEST_CASE("snf of a primitive row vector") {
    IntMatrix a = IntMatrix::from_rows({{6, 10, 15}});
    SnfResult s = snf(a);
    CHECK(s.D == IntMatrix::from_rows({{1, 0, 0}}));
    check_snf_contract(a, s);
}

TEST_CASE("snf contract on random matrices") {
    std::mt19937 rng(20240811);
    for (int t = 0; t < 150; ++t) {
        IntMatrix a = testutil::random_matrix(rng);
        check_snf_contract(a, snf(a));
    }
}

TEST_CASE("snf diagonal is independent of pivot choices") {
    std::mt19937 rng(7);
    for (int t = 0; t < 40; ++t) {
        IntMatrix a = testutil::random_matrix(rng);
        SnfResult canonical = snf(a);
        SnfResult randomized = snf(a, SnfPivot::Randomized, 1000 + t);
        CHECK(canonical.D == randomized.D);
        check_snf_contract(a, randomized);
    }
}

TEST_CASE("determinant by Bareiss elimination") {
    CHECK(det(IntMatrix::identity(4)) == 1);
    CHECK(det(IntMatrix::from_rows({{2, 4}, {6, 8}})) == -8);
    CHECK(det(IntMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(det(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("unimodular inverse and right inverse") {
    std::mt19937 rng(99);
    for (int t = 0; t < 25; ++t) {
        IntMatrix u = testutil::random_unimodular(rng, 4);
        CHECK(u * inverse_unimodular(u) == IntMatrix::identity(4));
    }
    IntMatrix wide = IntMatrix::from_rows({{1, 0, 2}, {0, 1, 3}});
    IntMatrix s = right_inverse(wide);
    CHECK(wide * s == IntMatrix::identity(2));
    CHECK_THROWS_AS(right_inverse(IntMatrix::from_rows({{2, 0}, {0, 1}})), DomainError);
}

TEST_CASE("quotient by a primitive vector") {
    QuotientLattice q = quotient_by_vector(2, IntVec({1, 1}));
    CHECK(q.rank == 1);
    CHECK(q.torsion.empty());
    CHECK(q.annihilates(IntVec({1, 1})));
    CHECK((q.projection * IntVec({1, 1})).is_zero());
    CHECK(q.projection.rows == 1);
}

TEST_CASE("quotient by an imprimitive vector reports torsion") {
    QuotientLattice q = quotient_by_vector(2, IntVec({2, 0}));
    CHECK(q.rank == 1);
    REQUIRE(q.torsion.size() == 1);
    CHECK(q.torsion[0] == 2);
    CHECK(q.annihilates(IntVec({2, 0})));
}

TEST_CASE("quotient by zero fails") {
    CHECK_THROWS_AS(quotient_by_vector(3, IntVec({0, 0, 0})), DomainError);
    CHECK_THROWS_AS(quotient_by_vector(3, IntVec({1, 0})), DomainError);
}

TEST_CASE("quotient properties on random vectors") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<std::size_t> dim(2, 6);
    std::uniform_int_distribution<int> mult(2, 5);
    for (int t = 0; t < 120; ++t) {
        std::size_t r = dim(rng);
        IntVec e = testutil::random_vector(rng, r);
        if (e.is_zero()) continue;
        QuotientLattice q = quotient_by_vector(r, e);
        CHECK(q.annihilates(e));
        Int g = e.content();
        if (g == 1) {
            CHECK(q.rank == r - 1);
            CHECK(q.torsion.empty());
            // the free projection must be onto: all Smith invariants 1
            SnfResult s = snf(q.free_projection());
            for (std::size_t i = 0; i < q.rank; ++i) CHECK(s.D.at(i, i) == 1);
        } else {
            REQUIRE(q.torsion.size() == 1);
            CHECK(q.torsion[0] == g);
        }

        // scale a primitive vector: torsion picks up exactly the multiplier
        if (g == 1) {
            Int m(mult(rng));
            IntVec scaled = e;
            for (auto& x : scaled.entries) x *= m;
            QuotientLattice qs = quotient_by_vector(r, scaled);
            REQUIRE(qs.torsion.size() == 1);
            CHECK(qs.torsion[0] == m);
            CHECK(qs.annihilates(scaled));
        }
    }
}

TEST_CASE("any two valid projections differ by a unimodular basis change") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<std::size_t> dim(2, 6);
    for (int t = 0; t < 60; ++t) {
        std::size_t r = dim(rng);
        IntVec e = testutil::random_vector(rng, r);
        if (e.is_zero() || e.content() != 1) continue;
        IntMatrix p1 = quotient_by_vector(r, e).free_projection();
        IntMatrix p2 = quotient_by_vector(r, e, SnfPivot::Randomized, 5000 + t).free_projection();
        IntMatrix w = p2 * right_inverse(p1);
        CHECK(abs(det(w)) == 1);
        CHECK(w * p1 == p2);

        // downstream mod-2 classes agree up to that change of basis
        IntVec c = testutil::random_vector(rng, r);
        CHECK(mod2(p1 * c).is_zero() == mod2(p2 * c).is_zero());
    }
}

TEST_CASE("orthogonality pins the reference pullback matrix") {
    // Euler vector (1, l2, 1, ..., 1) against the hand-chosen matrix: every
    // column pairing vanishes, so it is one valid annihilating choice.
    for (long long k = 1; k <= 6; ++k)
        for (int l2 = 1; l2 <= 10; ++l2) {
            IntMatrix m = testutil::reference_pullback_matrix(k, Int(l2));
            std::vector<Int> l(static_cast<std::size_t>(k) + 2, Int(1));
            l[1] = l2;
            for (std::size_t j = 0; j < m.cols; ++j) {
                Int s = 0;
                for (std::size_t i = 0; i < m.rows; ++i) s += l[i] * m.at(i, j);
                CHECK(s == 0);
            }
        }
}
