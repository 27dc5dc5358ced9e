#pragma once

#include "qindex/characteristic.hpp"

namespace qindex {

struct EngineOptions {
    int orientation_sign = +1;        // +1 is the calibrated choice; -1 flips every index
    std::optional<int> numerator_cap; // override, must be >= 8m
    bool parallel = true;             // distribute the per-summand work
};

// full alternating numerator sum_j (-1)^j ch(e_j) ch(f_j), capped
GradedPolynomial alternating_numerator(int m, int k, int cap, bool parallel = true);

// divide the numerator by the euler class prod_l (y_l^2 - y^2)
GradedPolynomial solve_universal_equation(const GradedPolynomial& numerator, int m);

struct IndexFormula {
    int m = 0;
    int k = 0;
    GradedPolynomial expr; // over (p1..pm, q1), homogeneous of degree 4m
};

IndexFormula index_formula(int m, int k, const EngineOptions& opts = {});

// the degree-4m invariant before the change to the closed-form basis
GradedPolynomial index_density(int m, int k, const EngineOptions& opts = {});

// specialization that kills the quaternionic line: substitute y -> 0 in the
// k = 0 density and express it over (c2, c4, ..., c_{2m})
GradedPolynomial glmh_specialization(int m, const EngineOptions& opts = {});

// the degree-4m part of (-1)^m (m+1) td over (c2, ..., c_{2m}), for comparison
GradedPolynomial glmh_expected(int m);

// character identity behind the specialization: the t-derivative of the
// lambda_t class of the rank-2m factor at t = -1 against its product form
bool salamon_character_identity(int m, int cap);

} // namespace qindex
