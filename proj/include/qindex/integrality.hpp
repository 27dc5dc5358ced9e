#pragma once

#include "qindex/lattice.hpp"
#include "qindex/manifold.hpp"

namespace qindex {

// an integer combination of index formulas together with its residual class,
// the part of the combined polynomial that is forced to be an integer
struct IntegralityCondition {
    IntRow combo;
    GradedPolynomial residual;
};

// sum combo_i * f_i.expr; formulas must share m
IntegralityCondition make_combination(const std::vector<IndexFormula>& fs, const IntRow& combo);

// true when every monomial involving q1 has an integer coefficient
bool has_integer_q1_coefficients(const GradedPolynomial& expr);

// HNF basis of {a in Z^n : sum_i a_i f_i has integer q1-coefficients}
IntMat combo_lattice(const std::vector<IndexFormula>& fs);

// canonical conditions: the HNF rows, followed by short vectors from a
// reduced basis (duplicates removed)
std::vector<IntegralityCondition> integrality_conditions(const std::vector<IndexFormula>& fs);

} // namespace qindex
