#pragma once

#include "qindex/index.hpp"

namespace qindex {

// evaluation data for one closed manifold: the value of every degree-4m
// monomial in (p1..pm, q1) against the fundamental class
struct ManifoldCharData {
    std::string name;
    int m = 0;
    std::map<std::vector<int>, Rational> values; // key: exponent vector over (p1..pm, q1)
};

// all monomials of the given cohomological degree over a variable table
std::vector<Monomial> enumerate_monomials(const VarTablePtr& vt, int degree);

// quaternionic projective space: total pontryagin class (1+u)^{2m+2}(1+4u)^{-1},
// q1 = 4u, u^m evaluates to 1
ManifoldCharData hp_characteristic_data(int m);

Rational evaluate_expression(const GradedPolynomial& expr, const ManifoldCharData& data);
Rational evaluate_formula(const IndexFormula& f, const ManifoldCharData& data);

} // namespace qindex
