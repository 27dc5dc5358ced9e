#include "qindex/symmetric.hpp"

#include <algorithm>

namespace qindex {

GradedPolynomial elementary_symmetric(int k, std::span<const GradedPolynomial> xs) {
    if (k < 0 || (std::size_t)k > xs.size())
        throw DomainError("elementary_symmetric: index out of range");
    if (xs.empty()) throw DomainError("elementary_symmetric: empty argument list");
    auto vt = xs[0].vars();
    std::vector<GradedPolynomial> e;
    e.reserve(k + 1);
    e.push_back(GradedPolynomial::constant(vt, Rational(1)));
    for (int t = 1; t <= k; ++t) e.push_back(GradedPolynomial::zero(vt));
    for (const auto& x : xs) {
        for (int t = std::min<int>(k, (int)e.size() - 1); t >= 1; --t)
            e[t] += e[t - 1] * x;
    }
    return e[k];
}

RootRing make_root_ring(int m) {
    if (m < 1) throw DomainError("root ring needs m >= 1");
    std::vector<std::pair<std::string, int>> vars;
    for (int l = 1; l <= m; ++l) vars.push_back({"y" + std::to_string(l), 2});
    vars.push_back({"y", 2});
    return RootRing{m, VarTable::make(vars)};
}

GradedPolynomial RootRing::yl(int l) const {
    if (l < 1 || l > m) throw DomainError("root index out of range");
    return GradedPolynomial::variable(vt, "y" + std::to_string(l));
}

GradedPolynomial u_class(const RootRing& ring, int l) {
    auto yl = ring.yl(l);
    auto y = ring.y();
    return yl * yl - y * y;
}

GradedPolynomial q1_class(const RootRing& ring) {
    auto y = ring.y();
    return Rational(4) * (y * y);
}

GradedPolynomial euler_class(const RootRing& ring) {
    GradedPolynomial e = GradedPolynomial::constant(ring.vt, Rational(1));
    for (int l = 1; l <= ring.m; ++l) e = e * u_class(ring, l);
    return e;
}

bool check_weyl_invariance(const GradedPolynomial& p, int m) {
    RootRing ring{m, p.vars()};
    for (int l = 1; l <= m; ++l)
        if (!p.vars()->find("y" + std::to_string(l)))
            throw DomainError("check_weyl_invariance: not a root ring for this m");

    auto identity = [&]() {
        std::map<std::string, GradedPolynomial> img;
        img.emplace("y", ring.y());
        for (int l = 1; l <= m; ++l) img.emplace("y" + std::to_string(l), ring.yl(l));
        return img;
    };

    std::vector<std::map<std::string, GradedPolynomial>> gens;
    if (p.vars()->find("y")) {
        auto img = identity();
        img.at("y") = -ring.y();
        gens.push_back(img);
    }
    for (int l = 1; l <= m; ++l) {
        auto img = identity();
        img.at("y" + std::to_string(l)) = -ring.yl(l);
        gens.push_back(img);
    }
    for (int l = 1; l < m; ++l) {
        auto img = identity();
        img.at("y" + std::to_string(l)) = ring.yl(l + 1);
        img.at("y" + std::to_string(l + 1)) = ring.yl(l);
        gens.push_back(img);
    }

    for (const auto& img : gens)
        if (substitute(p, img, p.cap(), p.vars()) != p) return false;
    return true;
}

// ---- GeneratorBasis ----

GeneratorBasis::GeneratorBasis(std::vector<Generator> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw DomainError("generator basis needs at least one generator");
    roots_ = gens_[0].expansion.vars();
    std::vector<std::pair<std::string, int>> names;
    for (const auto& g : gens_) {
        if (!g.expansion.vars()->same_as(*roots_))
            throw GradingMismatch("generator expansions over different variable tables");
        if (g.expansion.is_zero() || !is_homogeneous_of(g.expansion, g.degree))
            throw GradingMismatch("generator " + g.name + " expansion not homogeneous of its degree");
        names.push_back({g.name, g.degree});
    }
    abstract_ = VarTable::make(names);
    elim_order_.resize(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i) elim_order_[i] = i;
    std::stable_sort(elim_order_.begin(), elim_order_.end(),
                     [&](std::size_t a, std::size_t b) { return gens_[a].degree > gens_[b].degree; });
}

GradedPolynomial GeneratorBasis::express(const GradedPolynomial& p) const {
    if (!p.vars()->same_as(*roots_))
        throw GradingMismatch("express: polynomial over unexpected variable table");

    std::vector<std::pair<Monomial, Rational>> lts;
    lts.reserve(gens_.size());
    for (const auto& g : gens_) lts.push_back(g.expansion.leading_term());

    GradedPolynomial result(abstract_);
    GradedPolynomial work = p; // keeps p's cap, so expansion tails beyond it stay truncated
    while (!work.is_zero()) {
        auto [lm, lc] = work.leading_term();
        Monomial rest = lm;
        Rational coef = lc;
        Monomial gmono = Monomial::one(gens_.size());
        for (std::size_t oi : elim_order_) {
            const auto& [glm, glc] = lts[oi];
            while (mono_divides(glm, rest)) {
                rest = mono_div(rest, glm);
                coef /= glc;
                gmono.exps[oi] += 1;
            }
        }
        if (!rest.is_one())
            throw NotExpressible("leading monomial outside the generator staircase");

        GradedPolynomial expansion = GradedPolynomial::constant(roots_, coef);
        for (std::size_t i = 0; i < gens_.size(); ++i)
            for (int e = 0; e < gmono.exps[i]; ++e) expansion = expansion * gens_[i].expansion;
        work -= expansion;
        result.add_term(gmono, coef);
    }
    return result;
}

GradedPolynomial GeneratorBasis::expand(const GradedPolynomial& expr) const {
    if (!expr.vars()->same_as(*abstract_))
        throw GradingMismatch("expand: expression over unexpected variable table");
    std::map<std::string, GradedPolynomial> img;
    for (const auto& g : gens_) img.emplace(g.name, g.expansion);
    return substitute(expr, img, expr.cap(), roots_);
}

// ---- quaternionic bases ----

GeneratorBasis quaternionic_d_basis(int m) {
    auto ring = make_root_ring(m);
    std::vector<GradedPolynomial> us;
    for (int l = 1; l <= m; ++l) us.push_back(u_class(ring, l));
    std::vector<Generator> gens;
    for (int j = 1; j <= m; ++j)
        gens.push_back({"d" + std::to_string(j), 4 * j, elementary_symmetric(j, us)});
    gens.push_back({"q1", 4, q1_class(ring)});
    return GeneratorBasis(std::move(gens));
}

GeneratorBasis pontryagin_basis(int m) {
    auto ring = make_root_ring(m);
    auto one = GradedPolynomial::constant(ring.vt, Rational(1));
    auto q1 = q1_class(ring);
    GradedPolynomial total = one;
    for (int l = 1; l <= m; ++l) {
        auto f = one + u_class(ring, l);
        total = total * (f * f + q1);
    }
    std::vector<Generator> gens;
    for (int j = 1; j <= m; ++j)
        gens.push_back({"p" + std::to_string(j), 4 * j, total.homogeneous_part(4 * j)});
    gens.push_back({"q1", 4, q1});
    return GeneratorBasis(std::move(gens));
}

GeneratorBasis chern_f_basis(int m) {
    auto ring = make_root_ring(m);
    std::vector<GradedPolynomial> negsq;
    for (int l = 1; l <= m; ++l) {
        auto yl = ring.yl(l);
        negsq.push_back(-(yl * yl));
    }
    std::vector<Generator> gens;
    for (int j = 1; j <= m; ++j)
        gens.push_back({"c" + std::to_string(2 * j), 4 * j, elementary_symmetric(j, negsq)});
    return GeneratorBasis(std::move(gens));
}

std::map<std::string, GradedPolynomial> d_to_p_images(int m) {
    auto dbasis = quaternionic_d_basis(m);
    auto pbasis = pontryagin_basis(m);
    auto pvt = pbasis.abstract_vars();

    std::map<std::string, GradedPolynomial> images;
    images.emplace("q1", GradedPolynomial::variable(pvt, "q1"));
    for (int j = 1; j <= m; ++j) {
        // p_j in the d-basis; the d_j coefficient is 2^j and everything else
        // involves only q1 and d_i with i < j, so inversion is triangular
        auto Fj = dbasis.express(pbasis.generators()[j - 1].expansion);
        Monomial dj = Monomial::one(m + 1);
        dj.exps[j - 1] = 1;
        Rational cj = Fj.coeff(dj);
        if (sgn(cj) == 0) throw DomainError("triangular basis change lost its pivot");
        GradedPolynomial Hj = Fj;
        Hj.add_term(dj, -cj);
        auto HjP = substitute(Hj, images, std::nullopt, pvt);
        auto pj = GradedPolynomial::variable(pvt, "p" + std::to_string(j));
        images.emplace("d" + std::to_string(j), (Rational(1) / cj) * (pj - HjP));
    }
    return images;
}

GradedPolynomial d_expr_to_p_expr(const GradedPolynomial& dExpr, int m) {
    auto images = d_to_p_images(m);
    auto pvt = pontryagin_basis(m).abstract_vars();
    return substitute(dExpr, images, std::nullopt, pvt);
}

} // namespace qindex
