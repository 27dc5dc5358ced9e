#include "qindex/index.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

using namespace qindex;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count() / reps;
}

void report(const std::string& name, double serial, double parallel, bool equal) {
    std::cout << name << ": serial " << serial * 1e3 << " ms, parallel " << parallel * 1e3
              << " ms, speedup " << (parallel > 0 ? serial / parallel : 0.0)
              << (equal ? " (results identical)" : " (RESULTS DIFFER)") << "\n";
}

} // namespace

int main() {
#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without openmp; parallel kernels fall back to serial\n";
#endif

    {
        // dense random multiply in four degree-2 variables, capped
        auto vt = VarTable::make({{"x1", 2}, {"x2", 2}, {"x3", 2}, {"x4", 2}});
        std::mt19937 rng(1);
        GradedPolynomial a(vt, 28), b(vt, 28);
        for (int t = 0; t < 1200; ++t) {
            Monomial m = Monomial::one(4), n = Monomial::one(4);
            for (auto& e : m.exps) e = (int)(rng() % 6);
            for (auto& e : n.exps) e = (int)(rng() % 6);
            a.add_term(m, make_rational((long)(rng() % 2001) - 1000, (long)(rng() % 97) + 1));
            b.add_term(n, make_rational((long)(rng() % 2001) - 1000, (long)(rng() % 97) + 1));
        }
        auto rs = mul_serial(a, b);
        auto rp = mul_parallel(a, b);
        report("polynomial multiply",
               seconds([&] { (void)mul_serial(a, b); }, 3),
               seconds([&] { (void)mul_parallel(a, b); }, 3), rs == rp);
    }

    {
        // character sum of the largest summand in dimension 12, k = 2
        auto ring = make_root_ring(3);
        auto mp = build_module_pair(3, 2, 3);
        auto rs = roots_from_weights(mp.f_factor, ring);
        auto cs = chern_character_serial(rs, 24);
        auto cp = chern_character_parallel(rs, 24);
        report("chern character (" + std::to_string(rs.roots.size()) + " roots)",
               seconds([&] { (void)chern_character_serial(rs, 24); }, 3),
               seconds([&] { (void)chern_character_parallel(rs, 24); }, 3), cs == cp);
    }

    {
        auto ns = alternating_numerator(3, 1, 24, false);
        auto np = alternating_numerator(3, 1, 24, true);
        report("alternating numerator (m=3, k=1)",
               seconds([&] { (void)alternating_numerator(3, 1, 24, false); }, 2),
               seconds([&] { (void)alternating_numerator(3, 1, 24, true); }, 2), ns == np);
    }

    return 0;
}
