#include "qindex/check_suite.hpp"

#include "qindex/integrality.hpp"
#include "qindex/render.hpp"

#include <functional>
#include <ostream>

namespace qindex {

namespace {

GradedPolynomial from_table(int m, const std::vector<std::pair<std::vector<int>, Rational>>& rows) {
    auto vt = pontryagin_basis(m).abstract_vars();
    GradedPolynomial p(vt);
    for (const auto& [exps, c] : rows) p.add_term(Monomial{exps}, c);
    return p;
}

GradedPolynomial dim8_reference(int k) {
    if (k == 0)
        return from_table(2, {{{2, 0, 0}, make_rational(7, 1920)},
                              {{1, 0, 1}, make_rational(-1, 24)},
                              {{0, 1, 0}, make_rational(-1, 480)},
                              {{0, 0, 2}, make_rational(1, 12)}});
    return from_table(2, {{{2, 0, 0}, make_rational(209, 1920)},
                          {{1, 0, 1}, make_rational(11, 24)},
                          {{0, 1, 0}, make_rational(-167, 480)},
                          {{0, 0, 2}, make_rational(25, 12)}});
}

GradedPolynomial dim12_reference(int k) {
    if (k == 0)
        return from_table(3, {{{3, 0, 0, 0}, make_rational(31, 241920)},
                              {{2, 0, 0, 1}, make_rational(-7, 2304)},
                              {{1, 1, 0, 0}, make_rational(-11, 60480)},
                              {{1, 0, 0, 2}, make_rational(41, 2304)},
                              {{0, 1, 0, 1}, make_rational(1, 576)},
                              {{0, 0, 1, 0}, make_rational(1, 15120)},
                              {{0, 0, 0, 3}, make_rational(-73, 2304)}});
    return from_table(3, {{{3, 0, 0, 0}, make_rational(-1, 6720)},
                          {{2, 0, 0, 1}, make_rational(-77, 576)},
                          {{1, 1, 0, 0}, make_rational(1, 280)},
                          {{1, 0, 0, 2}, make_rational(-35, 576)},
                          {{0, 1, 0, 1}, make_rational(7, 18)},
                          {{0, 0, 1, 0}, make_rational(-17, 840)},
                          {{0, 0, 0, 3}, make_rational(-623, 576)}});
}

} // namespace

bool run_reference_checks(std::ostream& os) {
    bool all = true;
    auto check = [&](const std::string& name, const std::function<bool()>& fn) {
        bool ok = false;
        std::string detail;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        os << (ok ? "[ok]   " : "[FAIL] ") << name;
        if (!ok && !detail.empty()) os << " (" << detail << ")";
        os << "\n";
        all = all && ok;
    };

    check("dim 8, k=0 closed form", [] { return index_formula(2, 0).expr == dim8_reference(0); });
    check("dim 8, k=1 closed form", [] { return index_formula(2, 1).expr == dim8_reference(1); });
    check("dim 12, k=0 closed form", [] { return index_formula(3, 0).expr == dim12_reference(0); });
    check("dim 12, k=1 closed form", [] { return index_formula(3, 1).expr == dim12_reference(1); });

    check("projective space indices", [] {
        auto hp2 = hp_characteristic_data(2);
        auto hp3 = hp_characteristic_data(3);
        return evaluate_formula(index_formula(2, 0), hp2) == Rational(1) &&
               evaluate_formula(index_formula(2, 1), hp2) == Rational(35) &&
               evaluate_formula(index_formula(3, 0), hp3) == Rational(-1) &&
               evaluate_formula(index_formula(3, 1), hp3) == Rational(-63);
    });

    check("quaternionic-line specialization, m=2 value", [] {
        auto vt = chern_f_basis(2).abstract_vars();
        GradedPolynomial expect(vt);
        expect.add_term(Monomial{{2, 0}}, make_rational(1, 80));
        expect.add_term(Monomial{{0, 1}}, make_rational(-1, 240));
        return glmh_specialization(2) == expect;
    });
    check("quaternionic-line specialization vs todd, m=2,3", [] {
        return glmh_specialization(2) == glmh_expected(2) &&
               glmh_specialization(3) == glmh_expected(3);
    });

    check("character identity, m=1,2,3", [] {
        return salamon_character_identity(1, 8) && salamon_character_identity(2, 8) &&
               salamon_character_identity(3, 12);
    });

    check("dim 8 integral combinations", [] {
        std::vector<IndexFormula> fs{index_formula(2, 0), index_formula(2, 1)};

        auto r1 = make_combination(fs, {Int(11), Int(1)});
        GradedPolynomial e1(fs[0].expr.vars());
        e1.add_term(Monomial{{2, 0, 0}}, make_rational(143, 960));
        e1.add_term(Monomial{{0, 1, 0}}, make_rational(-89, 240));
        e1.add_term(Monomial{{0, 0, 2}}, Rational(3));
        if (r1.residual != e1 || !has_integer_q1_coefficients(r1.residual)) return false;

        auto r2 = make_combination(fs, {Int(50), Int(-2)});
        GradedPolynomial e2(fs[0].expr.vars());
        e2.add_term(Monomial{{2, 0, 0}}, make_rational(-17, 480));
        e2.add_term(Monomial{{1, 0, 1}}, Rational(-3));
        e2.add_term(Monomial{{0, 1, 0}}, make_rational(71, 120));
        if (r2.residual != e2 || !has_integer_q1_coefficients(r2.residual)) return false;

        auto H = combo_lattice(fs);
        return lattice_contains(H, {Int(11), Int(1)}) &&
               lattice_contains(H, {Int(50), Int(-2)});
    });

    return all;
}

} // namespace qindex
