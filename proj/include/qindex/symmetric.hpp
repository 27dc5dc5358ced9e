#pragma once

#include "qindex/polynomial.hpp"

#include <span>

namespace qindex {

struct NotExpressible : std::runtime_error { using std::runtime_error::runtime_error; };

GradedPolynomial elementary_symmetric(int k, std::span<const GradedPolynomial> xs);

// Chern-root ring for one quaternionic dimension: variables y1..ym then y,
// all of cohomological degree 2.
struct RootRing {
    int m = 0;
    VarTablePtr vt;

    GradedPolynomial y() const { return GradedPolynomial::variable(vt, "y"); }
    GradedPolynomial yl(int l) const; // 1-based
};

RootRing make_root_ring(int m);

// u_l = y_l^2 - y^2  (degree 4)
GradedPolynomial u_class(const RootRing& ring, int l);
// q1 = 4 y^2  (degree 4)
GradedPolynomial q1_class(const RootRing& ring);
// euler class of the rank-2m real bundle with roots y_l +- y: prod_l (y_l^2 - y^2)
GradedPolynomial euler_class(const RootRing& ring);

// invariance under the full symmetry group: y -> -y, y_l -> -y_l, permutations
bool check_weyl_invariance(const GradedPolynomial& p, int m);

struct Generator {
    std::string name;
    int degree;                  // cohomological degree of the abstract symbol
    GradedPolynomial expansion;  // homogeneous root-ring polynomial of that degree
};

// A list of abstract generators with root-ring expansions. express() rewrites
// a root-ring polynomial as a polynomial in the generators by greedy leading
// monomial elimination; expand() is the inverse substitution.
class GeneratorBasis {
public:
    explicit GeneratorBasis(std::vector<Generator> gens);

    const VarTablePtr& abstract_vars() const { return abstract_; }
    const VarTablePtr& root_vars() const { return roots_; }
    const std::vector<Generator>& generators() const { return gens_; }

    GradedPolynomial express(const GradedPolynomial& p) const; // throws NotExpressible
    GradedPolynomial expand(const GradedPolynomial& expr) const;

private:
    std::vector<Generator> gens_;
    VarTablePtr abstract_;
    VarTablePtr roots_;
    std::vector<std::size_t> elim_order_; // decreasing degree, then declaration order
};

// generators d_j = e_j(u_1..u_m) plus q1
GeneratorBasis quaternionic_d_basis(int m);
// generators p_j = deg-4j part of prod_l ((1+u_l)^2 + q1), plus q1
GeneratorBasis pontryagin_basis(int m);
// generators c_{2j} = e_j(-y_1^2, ..., -y_m^2); y does not occur
GeneratorBasis chern_f_basis(int m);

// images d_j -> polynomial in (p1..pm, q1); includes the identity image of q1
std::map<std::string, GradedPolynomial> d_to_p_images(int m);
// rewrite an expression over (d1..dm, q1) as one over (p1..pm, q1)
GradedPolynomial d_expr_to_p_expr(const GradedPolynomial& dExpr, int m);

} // namespace qindex
