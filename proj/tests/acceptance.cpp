// Acceptance battery: one line per criterion, nonzero exit on any failure.
// argv[1] is the path to the command line binary (defaults to ./qindex).

#include "qindex/render.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <sys/wait.h>
#include <tuple>
#include <vector>

using namespace qindex;

namespace {

std::string g_cli = "./qindex";

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string trimmed(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
    return s;
}

bool g_all_ok = true;

void criterion(int n, const std::string& label, const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char line[512];
    std::snprintf(line, sizeof line, "[%s] criterion %d: %s (%.2f s)", ok ? "PASS" : "FAIL", n,
                  label.c_str(), dt);
    std::cout << line << "\n";
    if (!ok && !detail.empty()) std::cout << "       " << detail << "\n";
    g_all_ok = g_all_ok && ok;
}

GradedPolynomial from_table(int m, const std::vector<std::pair<std::vector<int>, Rational>>& rows) {
    auto vt = pontryagin_basis(m).abstract_vars();
    GradedPolynomial p(vt);
    for (const auto& [exps, c] : rows) p.add_term(Monomial{exps}, c);
    return p;
}

GradedPolynomial reference_formula(int m, int k) {
    if (m == 2 && k == 0)
        return from_table(2, {{{2, 0, 0}, make_rational(7, 1920)},
                              {{1, 0, 1}, make_rational(-1, 24)},
                              {{0, 1, 0}, make_rational(-1, 480)},
                              {{0, 0, 2}, make_rational(1, 12)}});
    if (m == 2 && k == 1)
        return from_table(2, {{{2, 0, 0}, make_rational(209, 1920)},
                              {{1, 0, 1}, make_rational(11, 24)},
                              {{0, 1, 0}, make_rational(-167, 480)},
                              {{0, 0, 2}, make_rational(25, 12)}});
    if (m == 3 && k == 0)
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

bool formula_via_cli(int m, int k, std::string& detail) {
    auto r = run_cli("formula --m " + std::to_string(m) + " --k " + std::to_string(k) +
                     " --format json");
    if (r.exit_code != 0) {
        detail = "cli formula exited with " + std::to_string(r.exit_code);
        return false;
    }
    auto parsed = parse_formula_json(r.out);
    if (parsed.expr != reference_formula(m, k)) {
        detail = "cli formula m=" + std::to_string(m) + " k=" + std::to_string(k) +
                 " differs from the reference";
        return false;
    }
    if (index_formula(m, k).expr != reference_formula(m, k)) {
        detail = "library formula differs from the reference";
        return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];

    criterion(1, "dimension 8 closed forms, library and cli", [](std::string& detail) {
        return formula_via_cli(2, 0, detail) && formula_via_cli(2, 1, detail);
    });

    criterion(2, "dimension 12 closed forms and reference battery", [](std::string& detail) {
        if (!formula_via_cli(3, 0, detail) || !formula_via_cli(3, 1, detail)) return false;
        auto r = run_cli("check --suite paper");
        if (r.exit_code != 0) {
            detail = "cli check suite exited with " + std::to_string(r.exit_code);
            return false;
        }
        return true;
    });

    criterion(3, "projective space indices via cli evaluate", [](std::string& detail) {
        const std::vector<std::tuple<int, int, std::string>> expect{
            {2, 0, "1"}, {2, 1, "35"}, {3, 0, "-1"}, {3, 1, "-63"}};
        for (const auto& [m, k, val] : expect) {
            auto r = run_cli("evaluate --m " + std::to_string(m) + " --k " + std::to_string(k) +
                             " --manifold hp");
            if (r.exit_code != 0 || trimmed(r.out) != val) {
                detail = "evaluate m=" + std::to_string(m) + " k=" + std::to_string(k) + " gave '" +
                         trimmed(r.out) + "', wanted " + val;
                return false;
            }
        }
        return true;
    });

    criterion(4, "quaternionic-line specialization", [](std::string& detail) {
        auto vt = chern_f_basis(2).abstract_vars();
        GradedPolynomial expect2(vt);
        expect2.add_term(Monomial{{2, 0}}, make_rational(1, 80));
        expect2.add_term(Monomial{{0, 1}}, make_rational(-1, 240));
        if (glmh_specialization(2) != expect2) {
            detail = "m=2 value differs";
            return false;
        }
        for (int m = 2; m <= 3; ++m)
            if (glmh_specialization(m) != glmh_expected(m)) {
                detail = "m=" + std::to_string(m) + " identity fails";
                return false;
            }
        return true;
    });

    criterion(5, "integral combinations and their lattice", [](std::string& detail) {
        std::vector<IndexFormula> fs{index_formula(2, 0), index_formula(2, 1)};

        auto r1 = make_combination(fs, {Int(11), Int(1)});
        GradedPolynomial e1(fs[0].expr.vars());
        e1.add_term(Monomial{{2, 0, 0}}, make_rational(143, 960));
        e1.add_term(Monomial{{0, 1, 0}}, make_rational(-89, 240));
        e1.add_term(Monomial{{0, 0, 2}}, Rational(3));
        auto r2 = make_combination(fs, {Int(50), Int(-2)});
        GradedPolynomial e2(fs[0].expr.vars());
        e2.add_term(Monomial{{2, 0, 0}}, make_rational(-17, 480));
        e2.add_term(Monomial{{1, 0, 1}}, Rational(-3));
        e2.add_term(Monomial{{0, 1, 0}}, make_rational(71, 120));
        if (r1.residual != e1 || r2.residual != e2) {
            detail = "published residuals not reproduced";
            return false;
        }

        auto H = combo_lattice(fs);
        if (!lattice_contains(H, {Int(11), Int(1)}) || !lattice_contains(H, {Int(50), Int(-2)})) {
            detail = "published combinations not in the lattice";
            return false;
        }

        auto rc = run_cli("integrality --m 2 --ks 0,1");
        if (rc.exit_code != 0 || rc.out.empty()) {
            detail = "cli integrality failed";
            return false;
        }
        return true;
    });

    criterion(6, "property battery", [](std::string& detail) {
        for (int m = 2; m <= 3; ++m)
            for (int k = 0; k <= 2; ++k) {
                for (int j = 0; j < 2 * m; ++j) {
                    auto hw = cartan_component_highest_weight(j, k, m);
                    if (Int(freudenthal_weights(hw, m).total_multiplicity()) !=
                        weyl_dimension(hw, m)) {
                        detail = "weight multiplicities disagree with the dimension formula";
                        return false;
                    }
                }
                auto num = alternating_numerator(m, k, 8 * m);
                if (!check_weyl_invariance(num, m)) {
                    detail = "numerator not symmetry invariant";
                    return false;
                }
                solve_universal_equation(num, m); // throws on failure
            }

        for (int m = 2; m <= 3; ++m) {
            auto basis = quaternionic_d_basis(m);
            auto avt = basis.abstract_vars();
            std::mt19937 rng(31 + m);
            for (int it = 0; it < 50; ++it) {
                GradedPolynomial expr(avt);
                for (int t = 0; t < 4; ++t) {
                    Monomial mono = Monomial::one(m + 1);
                    for (auto& e : mono.exps) e = (int)(rng() % 3);
                    expr.add_term(mono,
                                  make_rational((long)(rng() % 21) - 10, (long)(rng() % 9) + 1));
                }
                if (basis.express(basis.expand(expr)) != expr) {
                    detail = "basis round trip failed";
                    return false;
                }
            }
        }

        for (int m = 1; m <= 3; ++m)
            if (!salamon_character_identity(m, 4 * m)) {
                detail = "character identity fails at m=" + std::to_string(m);
                return false;
            }

        for (int m = 2; m <= 3; ++m) {
            auto hp = hp_characteristic_data(m);
            for (int k = 0; k <= 2; ++k)
                if (!is_integer(evaluate_formula(index_formula(m, k), hp))) {
                    detail = "projective index not an integer";
                    return false;
                }
        }
        return true;
    });

    criterion(7, "negative controls", [](std::string& detail) {
        auto num = alternating_numerator(2, 0, 16);
        for (const auto& [mono, c] : num.terms()) {
            (void)c;
            auto perturbed = num;
            perturbed.add_term(mono, make_rational(1, 3));
            try {
                solve_universal_equation(perturbed, 2);
                detail = "perturbed numerator still divided";
                return false;
            } catch (const NotDivisible&) {
            }
        }

        auto num3 = alternating_numerator(3, 0, 24);
        int count = 0;
        for (const auto& [mono, c] : num3.terms()) {
            (void)c;
            if (count++ % 23 != 0) continue;
            auto perturbed = num3;
            perturbed.add_term(mono, Rational(2));
            try {
                solve_universal_equation(perturbed, 3);
                detail = "perturbed numerator still divided (dimension 12)";
                return false;
            } catch (const NotDivisible&) {
            }
        }

        EngineOptions flip;
        flip.orientation_sign = -1;
        if (evaluate_formula(index_formula(2, 0, flip), hp_characteristic_data(2)) !=
            Rational(-1)) {
            detail = "orientation flip did not negate the index";
            return false;
        }
        return true;
    });

    std::cout << (g_all_ok ? "acceptance: all criteria passed" : "acceptance: FAILURES above")
              << "\n";
    return g_all_ok ? 0 : 1;
}
