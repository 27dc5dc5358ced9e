#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qindex/weights.hpp"

using namespace qindex;

TEST_CASE("sp(1) symmetric power weight strings") {
    auto s0 = sp1_symmetric_power_weights(0);
    CHECK(s0.total_multiplicity() == 1);
    CHECK(s0.entries.at({0}) == 1);

    auto s3 = sp1_symmetric_power_weights(3);
    CHECK(s3.total_multiplicity() == 4);
    CHECK(s3.entries.at({3}) == 1);
    CHECK(s3.entries.at({1}) == 1);
    CHECK(s3.entries.at({-1}) == 1);
    CHECK(s3.entries.at({-3}) == 1);
    CHECK_THROWS_AS(sp1_symmetric_power_weights(-1), WeightError);
}

TEST_CASE("cartan component highest weights") {
    auto w = cartan_component_highest_weight(2, 0, 2);
    CHECK(w.v == std::vector<int>{1, 1, 0, 0});
    w = cartan_component_highest_weight(1, 1, 2);
    CHECK(w.v == std::vector<int>{1, 0, 0, -1});
    w = cartan_component_highest_weight(0, 2, 3);
    CHECK(w.v == std::vector<int>{0, 0, 0, 0, 0, -2});
    CHECK_THROWS_AS(cartan_component_highest_weight(4, 0, 2), WeightError);
}

TEST_CASE("weyl dimensions of small sl(4) modules") {
    auto dim = [](std::vector<int> v) {
        return weyl_dimension(Weight{Coord::Z, std::move(v)}, 2);
    };
    CHECK(dim({0, 0, 0, 0}) == 1);
    CHECK(dim({1, 0, 0, 0}) == 4);
    CHECK(dim({1, 1, 0, 0}) == 6);
    CHECK(dim({1, 1, 1, 0}) == 4);
    CHECK(dim({2, 0, 0, 0}) == 10);
    CHECK(dim({1, 0, 0, -1}) == 15);
    CHECK(dim({1, 1, 0, -1}) == 20);
    CHECK(dim({1, 1, 1, -1}) == 10);
    CHECK_THROWS_AS(dim({0, 1, 0, 0}), WeightError);
}

TEST_CASE("freudenthal weight systems for sl(4)") {
    // exterior square: six permutations of (1,1,0,0), multiplicity free
    auto l2 = freudenthal_weights(Weight{Coord::Z, {1, 1, 0, 0}}, 2);
    CHECK(l2.total_multiplicity() == 6);
    CHECK(l2.entries.at({1, 0, 1, 0}) == 1);
    CHECK(l2.entries.size() == 6);

    // adjoint: twelve roots plus zero with multiplicity 3
    auto ad = freudenthal_weights(Weight{Coord::Z, {1, 0, 0, -1}}, 2);
    CHECK(ad.total_multiplicity() == 15);
    CHECK(ad.entries.at({0, 0, 0, 0}) == 3);
    CHECK(ad.entries.at({1, -1, 0, 0}) == 1);
    CHECK(ad.entries.size() == 13);

    // symmetric square: permutations of (2,0,0,0) and (1,1,0,0)
    auto s2 = freudenthal_weights(Weight{Coord::Z, {2, 0, 0, 0}}, 2);
    CHECK(s2.total_multiplicity() == 10);
    CHECK(s2.entries.at({2, 0, 0, 0}) == 1);
    CHECK(s2.entries.at({0, 1, 0, 1}) == 1);
    CHECK(s2.entries.size() == 10);
}

TEST_CASE("freudenthal total multiplicity equals the weyl dimension") {
    for (int m = 2; m <= 3; ++m)
        for (int k = 0; k <= 2; ++k)
            for (int j = 0; j < 2 * m; ++j) {
                auto hw = cartan_component_highest_weight(j, k, m);
                auto ws = freudenthal_weights(hw, m);
                CHECK(Int(ws.total_multiplicity()) == weyl_dimension(hw, m));
            }
}

TEST_CASE("freudenthal output is permutation invariant") {
    auto ws = freudenthal_weights(Weight{Coord::Z, {1, 1, 0, -2}}, 2);
    for (const auto& [w, mult] : ws.entries) {
        std::vector<int> s = w;
        std::sort(s.begin(), s.end(), std::greater<int>());
        do {
            CHECK(ws.entries.at(s) == mult);
        } while (std::next_permutation(s.begin(), s.end(), std::greater<int>()));
    }
}

TEST_CASE("restriction to the quaternionic torus") {
    auto l2 = freudenthal_weights(Weight{Coord::Z, {1, 1, 0, 0}}, 2);
    auto r = restrict_su_to_sp(l2, 2);
    CHECK(r.cs == Coord::X);
    CHECK(r.total_multiplicity() == 6);
    CHECK(r.entries.at({1, 1}) == 1);
    CHECK(r.entries.at({1, -1}) == 1);
    CHECK(r.entries.at({-1, 1}) == 1);
    CHECK(r.entries.at({-1, -1}) == 1);
    CHECK(r.entries.at({0, 0}) == 2);

    // the defining module restricts to (+-1, 0-pattern) weights
    auto f = restrict_su_to_sp(freudenthal_weights(Weight{Coord::Z, {1, 0, 0, 0}}, 2), 2);
    CHECK(f.entries.at({1, 0}) == 1);
    CHECK(f.entries.at({-1, 0}) == 1);
    CHECK(f.entries.at({0, 1}) == 1);
    CHECK(f.entries.at({0, -1}) == 1);
}

TEST_CASE("module pairs and the vanishing alternating dimension sum") {
    auto pair10 = build_module_pair(2, 0, 1);
    CHECK(pair10.e_factor.total_multiplicity() == 2);
    CHECK(pair10.f_factor.total_multiplicity() == 4);

    auto top = build_module_pair(2, 1, 4);
    CHECK(top.e_factor.total_multiplicity() == 7); // S^6
    CHECK(top.f_factor.total_multiplicity() == 1);
    CHECK(top.f_factor.entries.at({0, 0}) == 1);

    // Euler characteristic of the symbol sequence vanishes fiberwise
    for (int m = 2; m <= 3; ++m)
        for (int k = 0; k <= 2; ++k) {
            std::int64_t alt = 0;
            for (int j = 0; j <= 2 * m; ++j) {
                auto mp = build_module_pair(m, k, j);
                std::int64_t d =
                    mp.e_factor.total_multiplicity() * mp.f_factor.total_multiplicity();
                alt += (j % 2 == 0) ? d : -d;
            }
            CHECK(alt == 0);
        }

    // frozen dimension table for m = 2, k = 1: 2*4 - 3*15 + 4*20 - 5*10 + 7*1 = 0
    std::vector<std::int64_t> edims, fdims;
    for (int j = 0; j <= 4; ++j) {
        auto mp = build_module_pair(2, 1, j);
        edims.push_back(mp.e_factor.total_multiplicity());
        fdims.push_back(mp.f_factor.total_multiplicity());
    }
    CHECK(edims == std::vector<std::int64_t>{2, 3, 4, 5, 7});
    CHECK(fdims == std::vector<std::int64_t>{4, 15, 20, 10, 1});
}
