#pragma once

#include "qindex/rational.hpp"

#include <vector>

namespace qindex {

using IntRow = std::vector<Int>;
using IntMat = std::vector<IntRow>;

// row Hermite normal form via unimodular row operations: pivots positive,
// entries above each pivot reduced into [0, pivot), zero rows dropped
IntMat hnf_rows(IntMat M);

// basis (as rows, in HNF) of the integer kernel {x : A x = 0}
IntMat integer_kernel(const IntMat& A);

// membership of v in the row span over the integers; basis must be in HNF
bool lattice_contains(const IntMat& hnf_basis, const IntRow& v);

// LLL-reduced basis (delta = 3/4); exact rational Gram-Schmidt
IntMat lll_reduce(IntMat B);

// shortest nonzero vector by bounded search over small coordinates of a
// reduced basis; canonical sign (first nonzero entry positive)
IntRow shortest_vector(const IntMat& reduced);

} // namespace qindex
