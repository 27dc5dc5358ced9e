#include "qindex/integrality.hpp"

#include <algorithm>

namespace qindex {

IntegralityCondition make_combination(const std::vector<IndexFormula>& fs, const IntRow& combo) {
    if (fs.empty()) throw DomainError("no formulas given");
    if (combo.size() != fs.size()) throw DomainError("combination length mismatch");
    auto expr = GradedPolynomial::zero(fs[0].expr.vars());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].m != fs[0].m) throw DomainError("formulas over different dimensions");
        expr += Rational(combo[i]) * fs[i].expr;
    }
    return IntegralityCondition{combo, expr};
}

bool has_integer_q1_coefficients(const GradedPolynomial& expr) {
    auto q1 = expr.vars()->find("q1");
    if (!q1) throw DomainError("expression has no q1 generator");
    for (const auto& [mono, c] : expr.terms())
        if (mono.exps[*q1] > 0 && !is_integer(c)) return false;
    return true;
}

IntMat combo_lattice(const std::vector<IndexFormula>& fs) {
    if (fs.empty()) throw DomainError("no formulas given");
    int m = fs[0].m;
    auto pvt = fs[0].expr.vars();
    for (const auto& f : fs) {
        if (f.m != m) throw DomainError("formulas over different dimensions");
        if (!f.expr.vars()->same_as(*pvt)) throw DomainError("formulas over different generators");
    }
    auto q1 = pvt->find("q1");
    if (!q1) throw DomainError("generators are missing q1");

    std::vector<Monomial> cols;
    for (const auto& mono : enumerate_monomials(pvt, 4 * m))
        if (mono.exps[*q1] > 0) cols.push_back(mono);

    std::size_t n = fs.size();
    if (cols.empty()) {
        // nothing to constrain: the lattice is all of Z^n
        IntMat id(n, IntRow(n, 0));
        for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
        return id;
    }

    // per column j with common denominator D_j:
    //   sum_i a_i num_ij = D_j t_j for some integer t_j
    // so (a, t) lies in the kernel of [N | -diag(D)]
    IntMat A(cols.size(), IntRow(n + cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        Int D = 1;
        std::vector<Rational> coef(n);
        for (std::size_t i = 0; i < n; ++i) {
            coef[i] = fs[i].expr.coeff(cols[j]);
            Int l;
            mpz_lcm(l.get_mpz_t(), D.get_mpz_t(), coef[i].get_den().get_mpz_t());
            D = l;
        }
        for (std::size_t i = 0; i < n; ++i) {
            Rational scaled = coef[i] * Rational(D);
            if (!is_integer(scaled)) throw DomainError("denominator scaling failed");
            A[j][i] = scaled.get_num();
        }
        A[j][n + j] = -D;
    }

    auto K = integer_kernel(A);
    IntMat gens;
    for (const auto& row : K)
        gens.push_back(IntRow(row.begin(), row.begin() + (std::ptrdiff_t)n));
    return hnf_rows(std::move(gens));
}

std::vector<IntegralityCondition> integrality_conditions(const std::vector<IndexFormula>& fs) {
    auto H = combo_lattice(fs);
    std::vector<IntRow> combos(H.begin(), H.end());

    if (!H.empty()) {
        auto reduced = lll_reduce(H);
        auto sv = shortest_vector(reduced);
        std::vector<IntRow> extras(reduced.begin(), reduced.end());
        extras.push_back(sv);
        std::sort(extras.begin(), extras.end(),
                  [](const IntRow& a, const IntRow& b) {
                      Int na = 0, nb = 0;
                      for (const auto& x : a) na += x * x;
                      for (const auto& x : b) nb += x * x;
                      return cmp(na, nb) < 0;
                  });
        for (auto e : extras) {
            // canonical sign
            for (const auto& x : e) {
                if (sgn(x) == 0) continue;
                if (sgn(x) < 0)
                    for (auto& y : e) y = -y;
                break;
            }
            if (std::find(combos.begin(), combos.end(), e) == combos.end()) combos.push_back(e);
        }
    }

    std::vector<IntegralityCondition> out;
    out.reserve(combos.size());
    for (const auto& c : combos) out.push_back(make_combination(fs, c));
    return out;
}

} // namespace qindex
