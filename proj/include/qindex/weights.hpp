#pragma once

#include "qindex/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace qindex {

struct WeightError : std::runtime_error { using std::runtime_error::runtime_error; };

// Coordinate systems for weight vectors:
//   Sp1 - single coordinate, weight a of the sp(1) torus (root vector a*y)
//   Z   - 2m coordinates for sl(2m), sum fixed by the highest weight
//   X   - m coordinates for sp(m) (root vector sum_l c_l y_l)
enum class Coord { Sp1, Z, X };

struct Weight {
    Coord cs;
    std::vector<int> v;
};

// multiset of weights with multiplicities
struct WeightSystem {
    Coord cs;
    std::map<std::vector<int>, std::int64_t> entries;

    std::int64_t total_multiplicity() const;
    void add(const std::vector<int>& w, std::int64_t mult);
};

// weights n, n-2, ..., -n of the n-th symmetric power of the defining sp(1) module
WeightSystem sp1_symmetric_power_weights(int n);

// highest weight (Z coordinates, length 2m) of the Cartan summand
// (Lambda^j F tensor S^k F*)_0 used by the j-th term, 0 <= j < 2m
Weight cartan_component_highest_weight(int j, int k, int m);

// all weights of the irreducible sl(2m) module with the given dominant
// highest weight, multiplicities by Freudenthal's recursion
WeightSystem freudenthal_weights(const Weight& highest, int m);

// Weyl dimension formula for sl(2m); independent of freudenthal_weights
Int weyl_dimension(const Weight& highest, int m);

// restriction along the pairing (z_{2l-1}, z_{2l}) -> (x_l, -x_l):
// x_l coefficient = v_{2l-1} - v_{2l}
WeightSystem restrict_su_to_sp(const WeightSystem& ws, int m);

struct ModulePair {
    WeightSystem e_factor; // Sp1 coordinates
    WeightSystem f_factor; // X coordinates
};

// weight data of the j-th summand of the k-th complex in quaternionic
// dimension m: e-factor S^{j+k} (top j: S^{2(m+k)}), f-factor the restricted
// Cartan summand (top j: the determinant line, weight zero)
ModulePair build_module_pair(int m, int k, int j);

} // namespace qindex
