#include "qindex/characteristic.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qindex {

ChernRootSet roots_from_weights(const WeightSystem& ws, const RootRing& ring) {
    ChernRootSet rs{ring.vt, {}};
    switch (ws.cs) {
    case Coord::Sp1:
        for (const auto& [w, mult] : ws.entries) {
            auto r = Rational(w[0]) * ring.y();
            for (std::int64_t i = 0; i < mult; ++i) rs.roots.push_back(r);
        }
        break;
    case Coord::X:
        for (const auto& [w, mult] : ws.entries) {
            if ((int)w.size() != ring.m) throw WeightError("weight length does not match ring");
            GradedPolynomial r = GradedPolynomial::zero(ring.vt);
            for (int l = 0; l < ring.m; ++l)
                if (w[l] != 0) r += Rational(w[l]) * ring.yl(l + 1);
            for (std::int64_t i = 0; i < mult; ++i) rs.roots.push_back(r);
        }
        break;
    case Coord::Z:
        throw WeightError("Z-coordinate weights must be restricted before taking roots");
    }
    return rs;
}

GradedPolynomial total_chern(const ChernRootSet& rs, std::optional<int> cap) {
    GradedPolynomial c = GradedPolynomial::constant(rs.vars, Rational(1), cap);
    for (const auto& r : rs.roots)
        c = c * (GradedPolynomial::constant(rs.vars, Rational(1), cap) + r);
    return c;
}

GradedPolynomial chern_character_serial(const ChernRootSet& rs, int cap) {
    GradedPolynomial ch = GradedPolynomial::zero(rs.vars, cap);
    for (const auto& r : rs.roots) ch += series_exp(r, cap);
    return ch;
}

GradedPolynomial chern_character_parallel(const ChernRootSet& rs, int cap) {
#ifndef _OPENMP
    return chern_character_serial(rs, cap);
#else
    int nthreads = omp_get_max_threads();
    if (nthreads <= 1 || rs.roots.size() < 2) return chern_character_serial(rs, cap);
    std::vector<GradedPolynomial> partial;
    partial.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) partial.push_back(GradedPolynomial::zero(rs.vars, cap));
#pragma omp parallel num_threads(nthreads)
    {
        GradedPolynomial& local = partial[omp_get_thread_num()];
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < (std::ptrdiff_t)rs.roots.size(); ++i)
            local += series_exp(rs.roots[i], cap);
    }
    GradedPolynomial ch = GradedPolynomial::zero(rs.vars, cap);
    for (auto& p : partial) ch += p;
    return ch;
#endif
}

GradedPolynomial chern_character(const ChernRootSet& rs, int cap) {
#ifdef _OPENMP
    if (parallel_enabled() && omp_get_max_threads() > 1 && rs.roots.size() >= 8)
        return chern_character_parallel(rs, cap);
#endif
    return chern_character_serial(rs, cap);
}

namespace {

// (1 - exp(-r))/r = sum_{i>=0} (-1)^i r^i / (i+1)!
GradedPolynomial todd_denominator(const GradedPolynomial& r, int cap) {
    GradedPolynomial g = GradedPolynomial::constant(r.vars(), Rational(1), cap);
    GradedPolynomial rpow = g;
    for (int i = 1; 2 * i <= cap; ++i) {
        rpow = rpow * r;
        if (rpow.is_zero()) break;
        Rational c = make_rational(Int(i % 2 == 0 ? 1 : -1), factorial(i + 1));
        g += c * rpow;
    }
    return g;
}

} // namespace

GradedPolynomial todd_class(const ChernRootSet& rs, int cap) {
    GradedPolynomial td = GradedPolynomial::constant(rs.vars, Rational(1), cap);
    for (const auto& r : rs.roots) {
        if (r.is_zero()) continue;
        td = td * series_invert(todd_denominator(r, cap), cap);
    }
    return td;
}

GradedPolynomial todd_pair_factor(const GradedPolynomial& r, int cap) {
    auto g = todd_denominator(r, cap) * todd_denominator(-r, cap);
    return series_invert(g, cap);
}

GradedPolynomial lambda_t_character(const ChernRootSet& rs, const Rational& t, int cap) {
    GradedPolynomial acc = GradedPolynomial::constant(rs.vars, Rational(1), cap);
    for (const auto& r : rs.roots) {
        auto factor = GradedPolynomial::constant(rs.vars, Rational(1), cap) +
                      t * series_exp(r, cap);
        acc = acc * factor;
    }
    return acc;
}

GradedPolynomial ch_exterior_power(const ChernRootSet& rs, int j, int cap) {
    if (j < 0 || (std::size_t)j > rs.roots.size())
        throw DomainError("exterior power index out of range");
    std::vector<GradedPolynomial> exps;
    exps.reserve(rs.roots.size());
    for (const auto& r : rs.roots) exps.push_back(series_exp(r, cap));
    if (j == 0) return GradedPolynomial::constant(rs.vars, Rational(1), cap);
    return elementary_symmetric(j, exps);
}

TangentData tangent_euler_and_todd(int m, int cap) {
    auto ring = make_root_ring(m);
    GradedPolynomial td = GradedPolynomial::constant(ring.vt, Rational(1), cap);
    for (int l = 1; l <= m; ++l) {
        td = td * todd_pair_factor(ring.y() + ring.yl(l), cap);
        td = td * todd_pair_factor(ring.y() - ring.yl(l), cap);
    }
    return TangentData{euler_class(ring), td};
}

} // namespace qindex
