#include "qindex/weights.hpp"

#include <algorithm>
#include <numeric>

namespace qindex {

std::int64_t WeightSystem::total_multiplicity() const {
    std::int64_t t = 0;
    for (const auto& [w, m] : entries) t += m;
    return t;
}

void WeightSystem::add(const std::vector<int>& w, std::int64_t mult) {
    if (mult == 0) return;
    auto [it, inserted] = entries.emplace(w, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) entries.erase(it);
    }
}

WeightSystem sp1_symmetric_power_weights(int n) {
    if (n < 0) throw WeightError("negative symmetric power");
    WeightSystem ws{Coord::Sp1, {}};
    for (int i = 0; i <= n; ++i) ws.add({n - 2 * i}, 1);
    return ws;
}

Weight cartan_component_highest_weight(int j, int k, int m) {
    int n = 2 * m;
    if (m < 2) throw WeightError("need m >= 2");
    if (k < 0) throw WeightError("need k >= 0");
    if (j < 0 || j >= n) throw WeightError("summand index out of range");
    // z_1 + ... + z_j - k z_n
    std::vector<int> v(n, 0);
    for (int i = 0; i < j; ++i) v[i] = 1;
    v[n - 1] -= k;
    return Weight{Coord::Z, v};
}

namespace {

bool is_dominant(const std::vector<int>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1]) return false;
    return true;
}

// dominant integer vectors mu with descending entries, same coordinate sum as
// lam, and prefix sums bounded by lam's (the dominance-order condition)
void enumerate_dominant_below(const std::vector<int>& lam, std::vector<int>& cur,
                              std::size_t pos, long sum_so_far, const std::vector<long>& prefix,
                              long total, std::vector<std::vector<int>>& out) {
    std::size_t n = lam.size();
    if (pos == n) {
        if (sum_so_far == total) out.push_back(cur);
        return;
    }
    long remaining = (long)(n - pos);
    int hi = pos == 0 ? (int)(prefix[0]) : std::min<long>(cur[pos - 1], prefix[pos] - sum_so_far);
    // descending suffix of values <= v must still reach the total
    for (int v = hi;; --v) {
        if (sum_so_far + (long)v * remaining < total) break;
        cur[pos] = v;
        enumerate_dominant_below(lam, cur, pos + 1, sum_so_far + v, prefix, total, out);
    }
}

long depth(const std::vector<int>& lam, const std::vector<int>& mu) {
    // height of lam - mu as a nonnegative root combination = sum of prefix gaps
    long d = 0, acc = 0;
    for (std::size_t i = 0; i + 1 < lam.size(); ++i) {
        acc += lam[i] - mu[i];
        d += acc;
    }
    return d;
}

std::int64_t dot(const std::vector<int>& a, const std::vector<int>& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (std::int64_t)a[i] * b[i];
    return s;
}

} // namespace

WeightSystem freudenthal_weights(const Weight& highest, int m) {
    int n = 2 * m;
    if (highest.cs != Coord::Z) throw WeightError("freudenthal_weights expects Z coordinates");
    if ((int)highest.v.size() != n) throw WeightError("highest weight has wrong length");
    if (!is_dominant(highest.v)) throw WeightError("highest weight is not dominant");

    const std::vector<int>& lam = highest.v;
    std::vector<long> prefix(n);
    long total = 0;
    for (int i = 0; i < n; ++i) {
        total += lam[i];
        prefix[i] = total;
    }

    std::vector<std::vector<int>> doms;
    std::vector<int> cur(n, 0);
    enumerate_dominant_below(lam, cur, 0, 0, prefix, total, doms);
    std::sort(doms.begin(), doms.end(), [&](const auto& a, const auto& b) {
        return depth(lam, a) < depth(lam, b);
    });

    // rho = (n-1, ..., 1, 0); both sides of the recursion use the plain dot
    // product, whose sl(n) projection corrections cancel at equal coordinate sums
    std::vector<int> rho(n);
    for (int i = 0; i < n; ++i) rho[i] = n - 1 - i;
    std::vector<int> lamrho(n);
    for (int i = 0; i < n; ++i) lamrho[i] = lam[i] + rho[i];
    std::int64_t lam2 = dot(lamrho, lamrho);

    std::map<std::vector<int>, std::int64_t> mult; // dominant representatives only
    for (const auto& mu : doms) {
        if (mu == lam) {
            mult[mu] = 1;
            continue;
        }
        std::vector<int> murho(n);
        for (int i = 0; i < n; ++i) murho[i] = mu[i] + rho[i];
        std::int64_t denom = lam2 - dot(murho, murho);
        if (denom <= 0) throw WeightError("freudenthal denominator not positive");

        std::int64_t num = 0;
        std::vector<int> nu(n), nud(n);
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                // alpha = e_a - e_b; walk the unbroken alpha-string upward
                nu = mu;
                for (int t = 1;; ++t) {
                    nu[a] += 1;
                    nu[b] -= 1;
                    nud = nu;
                    std::sort(nud.begin(), nud.end(), std::greater<int>());
                    auto it = mult.find(nud);
                    if (it == mult.end()) break;
                    num += it->second * (std::int64_t)(nu[a] - nu[b]);
                }
            }
        }
        std::int64_t twice = 2 * num;
        if (twice % denom != 0) throw WeightError("freudenthal multiplicity not integral");
        std::int64_t mm = twice / denom;
        if (mm < 0) throw WeightError("freudenthal multiplicity negative");
        if (mm > 0) mult[mu] = mm;
    }

    // expand Weyl orbits: every distinct permutation of a dominant weight
    WeightSystem ws{Coord::Z, {}};
    for (const auto& [mu, mm] : mult) {
        std::vector<int> perm = mu;
        std::sort(perm.begin(), perm.end());
        do {
            ws.add(perm, mm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return ws;
}

Int weyl_dimension(const Weight& highest, int m) {
    int n = 2 * m;
    if (highest.cs != Coord::Z) throw WeightError("weyl_dimension expects Z coordinates");
    if ((int)highest.v.size() != n) throw WeightError("highest weight has wrong length");
    if (!is_dominant(highest.v)) throw WeightError("highest weight is not dominant");
    Int num = 1, den = 1;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            num *= highest.v[a] - highest.v[b] + b - a;
            den *= b - a;
        }
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw WeightError("weyl dimension not integral");
    return q;
}

WeightSystem restrict_su_to_sp(const WeightSystem& ws, int m) {
    if (ws.cs != Coord::Z) throw WeightError("restriction expects Z coordinates");
    WeightSystem out{Coord::X, {}};
    for (const auto& [w, mult] : ws.entries) {
        if ((int)w.size() != 2 * m) throw WeightError("weight has wrong length");
        std::vector<int> x(m);
        for (int l = 0; l < m; ++l) x[l] = w[2 * l] - w[2 * l + 1];
        out.add(x, mult);
    }
    return out;
}

ModulePair build_module_pair(int m, int k, int j) {
    int n = 2 * m;
    if (m < 2) throw WeightError("need m >= 2");
    if (k < 0) throw WeightError("need k >= 0");
    if (j < 0 || j > n) throw WeightError("summand index out of range");
    if (j == n) {
        // top summand: S^{2(m+k)} E tensor the determinant line of F
        WeightSystem f{Coord::X, {}};
        f.add(std::vector<int>(m, 0), 1);
        return ModulePair{sp1_symmetric_power_weights(2 * (m + k)), f};
    }
    auto hw = cartan_component_highest_weight(j, k, m);
    return ModulePair{sp1_symmetric_power_weights(j + k),
                      restrict_su_to_sp(freudenthal_weights(hw, m), m)};
}

} // namespace qindex
