#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qindex/characteristic.hpp"

using namespace qindex;

namespace {

// Bernoulli numbers, B1 = -1/2 convention, via the Pascal-row recursion
std::vector<Rational> bernoulli(int n) {
    std::vector<Rational> B(n + 1, Rational(0));
    B[0] = Rational(1);
    for (int mm = 1; mm <= n; ++mm) {
        Rational acc(0);
        Int binom = 1; // C(mm+1, j) built incrementally
        for (int j = 0; j < mm; ++j) {
            acc += Rational(binom) * B[j];
            binom = binom * (mm + 1 - j) / (j + 1);
        }
        B[mm] = -acc / Rational(Int(mm + 1));
    }
    return B;
}

// r/(1 - exp(-r)) as a series via Bernoulli numbers: sum (-1)^n B_n r^n / n!
GradedPolynomial todd_factor_bernoulli(const GradedPolynomial& r, int cap) {
    auto B = bernoulli(cap / 2 + 1);
    GradedPolynomial t = GradedPolynomial::zero(r.vars(), cap);
    GradedPolynomial rpow = GradedPolynomial::constant(r.vars(), Rational(1), cap);
    for (int nn = 0; 2 * nn <= cap; ++nn) {
        if (nn > 0) rpow = rpow * r;
        if (rpow.is_zero()) break;
        Rational c = (nn % 2 == 0 ? B[nn] : -B[nn]) / Rational(factorial(nn));
        t += c * rpow;
    }
    return t;
}

} // namespace

TEST_CASE("roots from weight systems") {
    auto ring = make_root_ring(2);
    auto e = roots_from_weights(sp1_symmetric_power_weights(2), ring);
    CHECK(e.roots.size() == 3);
    // contains 2y, 0, -2y
    auto twoy = Rational(2) * ring.y();
    int found = 0;
    for (const auto& r : e.roots)
        if (r == twoy || r == -twoy || r.is_zero()) ++found;
    CHECK(found == 3);

    WeightSystem z{Coord::Z, {}};
    z.add({1, 0, 0, 0}, 1);
    CHECK_THROWS_AS(roots_from_weights(z, ring), WeightError);
}

TEST_CASE("chern character basics and kernels agree") {
    auto ring = make_root_ring(2);
    auto f = restrict_su_to_sp(freudenthal_weights(Weight{Coord::Z, {1, 0, 0, 0}}, 2), 2);
    auto rs = roots_from_weights(f, ring);
    auto ch = chern_character(rs, 8);
    // rank is the constant term
    CHECK(ch.constant_term() == Rational(4));
    // even bundle: odd parts vanish
    CHECK(ch.homogeneous_part(2).is_zero());
    CHECK(ch == chern_character_serial(rs, 8));
    CHECK(chern_character_serial(rs, 8) == chern_character_parallel(rs, 8));

    // additivity over a disjoint union of root sets
    auto e = roots_from_weights(sp1_symmetric_power_weights(1), ring);
    ChernRootSet both{ring.vt, {}};
    for (const auto& r : rs.roots) both.roots.push_back(r);
    for (const auto& r : e.roots) both.roots.push_back(r);
    CHECK(chern_character(both, 8) == chern_character(rs, 8) + chern_character(e, 8));
}

TEST_CASE("exterior power character matches the restricted module") {
    // ch of the exterior square computed two ways: subset sums of the defining
    // roots versus the weight system of the top-level module
    auto ring = make_root_ring(2);
    auto f1 = restrict_su_to_sp(freudenthal_weights(Weight{Coord::Z, {1, 0, 0, 0}}, 2), 2);
    auto rs1 = roots_from_weights(f1, ring);
    auto f2 = restrict_su_to_sp(freudenthal_weights(Weight{Coord::Z, {1, 1, 0, 0}}, 2), 2);
    auto rs2 = roots_from_weights(f2, ring);
    CHECK(ch_exterior_power(rs1, 2, 12) == chern_character(rs2, 12));
}

TEST_CASE("total chern class of a small root set") {
    auto ring = make_root_ring(2);
    ChernRootSet rs{ring.vt, {ring.yl(1), -ring.yl(1)}};
    auto c = total_chern(rs);
    auto one = GradedPolynomial::constant(ring.vt, Rational(1));
    CHECK(c == one - ring.yl(1) * ring.yl(1));
}

TEST_CASE("todd factors against the bernoulli recursion") {
    auto ring = make_root_ring(2);
    auto y = ring.y();
    int cap = 12;

    ChernRootSet single{ring.vt, {y}};
    CHECK(todd_class(single, cap) == todd_factor_bernoulli(y, cap));

    auto pair_direct = todd_pair_factor(y, cap);
    CHECK(pair_direct == todd_factor_bernoulli(y, cap) * todd_factor_bernoulli(-y, cap));

    ChernRootSet pair{ring.vt, {y, -y}};
    CHECK(todd_class(pair, cap) == pair_direct);

    // frozen leading coefficients: 1 - r^2/12 + r^4/240
    GradedPolynomial expect(ring.vt, 8);
    expect.add_term(Monomial::one(3), Rational(1));
    Monomial y2 = Monomial::one(3);
    y2.exps[2] = 2;
    expect.add_term(y2, make_rational(-1, 12));
    Monomial y4 = Monomial::one(3);
    y4.exps[2] = 4;
    expect.add_term(y4, make_rational(1, 240));
    CHECK(todd_pair_factor(y, 8) == expect);

    // zero roots contribute nothing
    ChernRootSet with_zero{ring.vt, {y, GradedPolynomial::zero(ring.vt), -y}};
    CHECK(todd_class(with_zero, cap) == todd_class(pair, cap));
}

TEST_CASE("lambda_t character and its exterior expansion") {
    auto ring = make_root_ring(2);
    auto f1 = restrict_su_to_sp(freudenthal_weights(Weight{Coord::Z, {1, 0, 0, 0}}, 2), 2);
    auto rs = roots_from_weights(f1, ring);
    int cap = 10;
    // lambda_t = sum_j t^j ch(Lambda^j) at t = 1 and t = -1
    for (long tv : {1L, -1L}) {
        Rational t(tv);
        GradedPolynomial expect = GradedPolynomial::zero(ring.vt, cap);
        for (int j = 0; j <= 4; ++j)
            expect += rational_pow(t, j) * ch_exterior_power(rs, j, cap);
        CHECK(lambda_t_character(rs, t, cap) == expect);
    }
}

TEST_CASE("tangent data: euler class and dual-route todd") {
    for (int m = 2; m <= 3; ++m) {
        int cap = 4 * m;
        auto td = tangent_euler_and_todd(m, cap);
        auto ring = make_root_ring(m);
        CHECK(td.euler == euler_class(ring));
        CHECK(is_homogeneous_of(td.euler, 4 * m));
        CHECK(td.todd.constant_term() == Rational(1));
        CHECK(check_weyl_invariance(td.todd, m));

        // same class from the flat list of complexified roots
        ChernRootSet all{ring.vt, {}};
        for (int l = 1; l <= m; ++l) {
            auto a = ring.y() + ring.yl(l);
            auto b = ring.y() - ring.yl(l);
            all.roots.push_back(a);
            all.roots.push_back(-a);
            all.roots.push_back(b);
            all.roots.push_back(-b);
        }
        CHECK(todd_class(all, cap) == td.todd);
    }
}
