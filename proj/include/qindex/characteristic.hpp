#pragma once

#include "qindex/symmetric.hpp"
#include "qindex/weights.hpp"

namespace qindex {

// Chern roots: degree-2 root-ring polynomials, one per weight (with multiplicity)
struct ChernRootSet {
    VarTablePtr vars;
    std::vector<GradedPolynomial> roots;
};

ChernRootSet roots_from_weights(const WeightSystem& ws, const RootRing& ring);

GradedPolynomial total_chern(const ChernRootSet& rs, std::optional<int> cap = std::nullopt);

// sum of exp(root); serial and parallel kernels plus a dispatching front
GradedPolynomial chern_character(const ChernRootSet& rs, int cap);
GradedPolynomial chern_character_serial(const ChernRootSet& rs, int cap);
GradedPolynomial chern_character_parallel(const ChernRootSet& rs, int cap);

// prod of r/(1 - exp(-r)) over the roots (zero roots contribute 1)
GradedPolynomial todd_class(const ChernRootSet& rs, int cap);

// the even series equal to the Todd factor of the paired roots {r, -r}
GradedPolynomial todd_pair_factor(const GradedPolynomial& r, int cap);

// prod (1 + t exp(root))
GradedPolynomial lambda_t_character(const ChernRootSet& rs, const Rational& t, int cap);

// Chern character of the j-th exterior power: e_j applied to the exp(root)s
GradedPolynomial ch_exterior_power(const ChernRootSet& rs, int j, int cap);

// tangent data of a 4m-manifold with roots {y +- y_l}: exact euler class
// prod_l (y_l^2 - y^2) and the Todd class of the complexification at cap
struct TangentData {
    GradedPolynomial euler;
    GradedPolynomial todd;
};

TangentData tangent_euler_and_todd(int m, int cap);

} // namespace qindex
