#include "qindex/index.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <optional>

namespace qindex {

namespace {

GradedPolynomial summand_term(const RootRing& ring, int m, int k, int j, int cap) {
    auto mp = build_module_pair(m, k, j);
    auto che = chern_character(roots_from_weights(mp.e_factor, ring), cap);
    auto chf = chern_character(roots_from_weights(mp.f_factor, ring), cap);
    auto t = che * chf;
    return (j % 2 == 0) ? t : -t;
}

} // namespace

GradedPolynomial alternating_numerator(int m, int k, int cap, bool parallel) {
    if (m < 2) throw DomainError("need m >= 2");
    if (k < 0) throw DomainError("need k >= 0");
    auto ring = make_root_ring(m);
    int nsum = 2 * m + 1;

#ifdef _OPENMP
    if (parallel && parallel_enabled() && omp_get_max_threads() > 1) {
        std::vector<std::optional<GradedPolynomial>> slots(nsum);
        std::string error;
#pragma omp parallel for schedule(dynamic)
        for (int j = 0; j < nsum; ++j) {
            try {
                slots[j] = summand_term(ring, m, k, j, cap);
            } catch (const std::exception& e) {
#pragma omp critical
                error = e.what();
            }
        }
        if (!error.empty()) throw DomainError(error);
        GradedPolynomial num = GradedPolynomial::zero(ring.vt, cap);
        for (auto& s : slots) num += *s;
        return num;
    }
#endif
    (void)parallel;
    GradedPolynomial num = GradedPolynomial::zero(ring.vt, cap);
    for (int j = 0; j < nsum; ++j) num += summand_term(ring, m, k, j, cap);
    return num;
}

GradedPolynomial solve_universal_equation(const GradedPolynomial& numerator, int m) {
    auto ring = make_root_ring(m);
    if (!numerator.vars()->same_as(*ring.vt))
        throw GradingMismatch("numerator over unexpected variable table");
    if (!numerator.cap() || *numerator.cap() < 8 * m)
        throw DomainError("numerator must carry a cap of at least 8m");
    return exact_divide(numerator, euler_class(ring));
}

GradedPolynomial index_density(int m, int k, const EngineOptions& opts) {
    if (opts.orientation_sign != 1 && opts.orientation_sign != -1)
        throw DomainError("orientation sign must be +1 or -1");
    int cap = opts.numerator_cap.value_or(8 * m);
    if (cap < 8 * m) throw DomainError("numerator cap must be at least 8m");

    auto num = alternating_numerator(m, k, cap, opts.parallel);
    auto x = solve_universal_equation(num, m).with_cap(4 * m);
    auto tangent = tangent_euler_and_todd(m, 4 * m);
    auto density = (x * tangent.todd).homogeneous_part(4 * m);
    if (opts.orientation_sign < 0) density = -density;
    return density;
}

IndexFormula index_formula(int m, int k, const EngineOptions& opts) {
    auto density = index_density(m, k, opts);
    auto dexpr = quaternionic_d_basis(m).express(density);
    return IndexFormula{m, k, d_expr_to_p_expr(dexpr, m)};
}

GradedPolynomial glmh_specialization(int m, const EngineOptions& opts) {
    auto density = index_density(m, 0, opts);
    auto ring = make_root_ring(m);
    std::map<std::string, GradedPolynomial> img;
    img.emplace("y", GradedPolynomial::zero(ring.vt));
    for (int l = 1; l <= m; ++l) img.emplace("y" + std::to_string(l), ring.yl(l));
    auto specialized = substitute(density, img, density.cap(), ring.vt);
    return chern_f_basis(m).express(specialized);
}

GradedPolynomial glmh_expected(int m) {
    auto ring = make_root_ring(m);
    ChernRootSet rs{ring.vt, {}};
    for (int l = 1; l <= m; ++l) {
        rs.roots.push_back(ring.yl(l));
        rs.roots.push_back(-ring.yl(l));
    }
    auto td_top = todd_class(rs, 4 * m).homogeneous_part(4 * m);
    Rational scale((m % 2 == 0 ? 1 : -1) * (m + 1));
    return chern_f_basis(m).express(scale * td_top);
}

bool salamon_character_identity(int m, int cap) {
    if (m < 1) throw DomainError("need m >= 1");
    auto ring = make_root_ring(m);
    std::vector<GradedPolynomial> roots;
    for (int l = 1; l <= m; ++l) {
        roots.push_back(ring.yl(l));
        roots.push_back(-ring.yl(l));
    }

    auto one = GradedPolynomial::constant(ring.vt, Rational(1), cap);

    // d/dt [ t * prod_j (1 + t e^{r_j}) ] at t = -1:
    //   prod_j (1 - e^{r_j}) - sum_j e^{r_j} prod_{i != j} (1 - e^{r_i})
    GradedPolynomial lhs = one;
    for (const auto& r : roots) lhs = lhs * (one - series_exp(r, cap));
    for (std::size_t j = 0; j < roots.size(); ++j) {
        GradedPolynomial prod = series_exp(roots[j], cap);
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (i != j) prod = prod * (one - series_exp(roots[i], cap));
        lhs -= prod;
    }

    GradedPolynomial rhs = one;
    for (int l = 1; l <= m; ++l)
        rhs = rhs * (one - series_exp(ring.yl(l), cap)) * (one - series_exp(-ring.yl(l), cap));
    rhs = Rational(m + 1) * rhs;

    return lhs == rhs;
}

} // namespace qindex
