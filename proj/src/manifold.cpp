#include "qindex/manifold.hpp"

namespace qindex {

namespace {

void enumerate_rec(const VarTablePtr& vt, int degree, std::size_t pos, Monomial& cur,
                   std::vector<Monomial>& out) {
    if (pos == vt->size()) {
        if (degree == 0) out.push_back(cur);
        return;
    }
    int d = vt->degree(pos);
    for (int e = 0; e * d <= degree; ++e) {
        cur.exps[pos] = e;
        enumerate_rec(vt, degree - e * d, pos + 1, cur, out);
    }
    cur.exps[pos] = 0;
}

} // namespace

std::vector<Monomial> enumerate_monomials(const VarTablePtr& vt, int degree) {
    std::vector<Monomial> out;
    Monomial cur = Monomial::one(vt->size());
    enumerate_rec(vt, degree, 0, cur, out);
    std::sort(out.begin(), out.end(), GrlexLess{vt.get()});
    return out;
}

ManifoldCharData hp_characteristic_data(int m) {
    if (m < 2) throw DomainError("need m >= 2");
    auto uvt = VarTable::make({{"u", 4}});
    auto u = GradedPolynomial::variable(uvt, "u", 4 * m);
    auto one = GradedPolynomial::constant(uvt, Rational(1), 4 * m);
    auto pont = pow_trunc(one + u, 2 * m + 2, 4 * m) *
                series_invert(one + Rational(4) * u, 4 * m);

    // coefficient of u^j is the value p_j = a_j u^j; u^m pairs to 1
    std::vector<Rational> a(m + 1, Rational(0));
    for (int j = 0; j <= m; ++j) {
        Monomial uj = Monomial::one(1);
        uj.exps[0] = j;
        a[j] = pont.coeff(uj);
    }

    ManifoldCharData data;
    data.name = "hp" + std::to_string(m);
    data.m = m;
    auto pvt = pontryagin_basis(m).abstract_vars();
    for (const auto& mono : enumerate_monomials(pvt, 4 * m)) {
        // value of p1^{e1} ... pm^{em} q1^{e0} = prod a_j^{e_j} * 4^{e_{q1}}
        Rational v(1);
        for (int j = 1; j <= m; ++j) v *= rational_pow(a[j], (unsigned)mono.exps[j - 1]);
        v *= rational_pow(Rational(4), (unsigned)mono.exps[m]);
        data.values.emplace(mono.exps, v);
    }
    return data;
}

Rational evaluate_expression(const GradedPolynomial& expr, const ManifoldCharData& data) {
    auto pvt = pontryagin_basis(data.m).abstract_vars();
    if (!expr.vars()->same_as(*pvt))
        throw GradingMismatch("expression and manifold data use different generators");
    Rational total(0);
    for (const auto& [mono, c] : expr.terms()) {
        if (mono.degree(*pvt) != 4 * data.m)
            throw DomainError("expression has a term of degree other than 4m");
        auto it = data.values.find(mono.exps);
        if (it == data.values.end()) throw DomainError("manifold data is missing a monomial value");
        total += c * it->second;
    }
    return total;
}

Rational evaluate_formula(const IndexFormula& f, const ManifoldCharData& data) {
    if (f.m != data.m) throw DomainError("formula and manifold have different dimensions");
    return evaluate_expression(f.expr, data);
}

} // namespace qindex
