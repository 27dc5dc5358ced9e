#include "qindex/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace qindex {

namespace {

Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void row_axpy(IntRow& dst, const Int& c, const IntRow& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= c * src[i];
}

// eliminate below the frontier in [col], keeping row ops unimodular;
// returns index of the surviving nonzero row, or -1
int clear_column(IntMat& M, std::size_t frontier, std::size_t col) {
    while (true) {
        int best = -1;
        int nonzero = 0;
        for (std::size_t i = frontier; i < M.size(); ++i) {
            if (sgn(M[i][col]) == 0) continue;
            ++nonzero;
            if (best < 0 || cmp(abs(M[i][col]), abs(M[(std::size_t)best][col])) < 0)
                best = (int)i;
        }
        if (nonzero == 0) return -1;
        if (nonzero == 1) return best;
        for (std::size_t i = frontier; i < M.size(); ++i) {
            if ((int)i == best || sgn(M[i][col]) == 0) continue;
            Int q = fdiv(M[i][col], M[(std::size_t)best][col]);
            if (sgn(q) != 0) row_axpy(M[i], q, M[(std::size_t)best]);
        }
    }
}

IntMat hnf_rows_bounded(IntMat M, std::size_t pivot_cols) {
    if (M.empty()) return M;
    std::size_t frontier = 0;
    for (std::size_t col = 0; col < pivot_cols && frontier < M.size(); ++col) {
        int prow = clear_column(M, frontier, col);
        if (prow < 0) continue;
        std::swap(M[frontier], M[(std::size_t)prow]);
        if (sgn(M[frontier][col]) < 0)
            for (auto& x : M[frontier]) x = -x;
        for (std::size_t i = 0; i < frontier; ++i) {
            Int q = fdiv(M[i][col], M[frontier][col]);
            if (sgn(q) != 0) row_axpy(M[i], q, M[frontier]);
        }
        ++frontier;
    }
    M.resize(frontier);
    return M;
}

Rational dotq(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int round_nearest(const Rational& q) {
    // floor(q + 1/2)
    Int num = q.get_num() * 2 + q.get_den();
    Int den = q.get_den() * 2;
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

Int norm2(const IntRow& v) {
    Int s = 0;
    for (const auto& x : v) s += x * x;
    return s;
}

} // namespace

IntMat hnf_rows(IntMat M) {
    if (M.empty()) return M;
    std::size_t cols = M[0].size();
    return hnf_rows_bounded(std::move(M), cols);
}

IntMat integer_kernel(const IntMat& A) {
    if (A.empty()) throw std::invalid_argument("kernel of an empty matrix");
    std::size_t r = A.size(), c = A[0].size();
    // rows of [A^T | I]; after reduction the rows with zero left part carry
    // kernel vectors in the right part
    IntMat M(c, IntRow(r + c, 0));
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = 0; j < r; ++j) M[i][j] = A[j][i];
        M[i][r + i] = 1;
    }
    // do not drop "zero" rows here: left part zero is exactly what we want
    std::size_t frontier = 0;
    for (std::size_t col = 0; col < r && frontier < M.size(); ++col) {
        int prow = clear_column(M, frontier, col);
        if (prow < 0) continue;
        std::swap(M[frontier], M[(std::size_t)prow]);
        ++frontier;
    }
    IntMat kernel;
    for (std::size_t i = frontier; i < M.size(); ++i) {
        bool leftzero = true;
        for (std::size_t j = 0; j < r && leftzero; ++j) leftzero = sgn(M[i][j]) == 0;
        if (!leftzero) throw std::logic_error("kernel extraction left a nonzero pivot row");
        kernel.push_back(IntRow(M[i].begin() + (std::ptrdiff_t)r, M[i].end()));
    }
    return hnf_rows(std::move(kernel));
}

bool lattice_contains(const IntMat& hnf_basis, const IntRow& v) {
    IntRow x = v;
    std::size_t n = x.size();
    for (const auto& row : hnf_basis) {
        std::size_t pivot = 0;
        while (pivot < n && sgn(row[pivot]) == 0) ++pivot;
        if (pivot == n) continue;
        if (sgn(x[pivot]) == 0) continue;
        Int q, rr;
        mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), x[pivot].get_mpz_t(), row[pivot].get_mpz_t());
        if (sgn(rr) != 0) return false;
        row_axpy(x, q, row);
    }
    return std::all_of(x.begin(), x.end(), [](const Int& t) { return sgn(t) == 0; });
}

IntMat lll_reduce(IntMat B) {
    B = hnf_rows(std::move(B)); // ensures linear independence of the rows
    std::size_t n = B.size();
    if (n <= 1) return B;

    auto gram = [&](std::vector<std::vector<Rational>>& mu, std::vector<Rational>& Bn,
                    std::vector<std::vector<Rational>>& gs) {
        std::size_t dim = B[0].size();
        gs.assign(n, std::vector<Rational>(dim, Rational(0)));
        mu.assign(n, std::vector<Rational>(n, Rational(0)));
        Bn.assign(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t d = 0; d < dim; ++d) gs[i][d] = Rational(B[i][d]);
            for (std::size_t j = 0; j < i; ++j) {
                std::vector<Rational> bi(B[i].size());
                for (std::size_t d = 0; d < bi.size(); ++d) bi[d] = Rational(B[i][d]);
                mu[i][j] = dotq(bi, gs[j]) / Bn[j];
                for (std::size_t d = 0; d < gs[i].size(); ++d) gs[i][d] -= mu[i][j] * gs[j][d];
            }
            Bn[i] = dotq(gs[i], gs[i]);
        }
    };

    std::vector<std::vector<Rational>> mu, gs;
    std::vector<Rational> Bn;
    gram(mu, Bn, gs);

    std::size_t k = 1;
    int guard = 0;
    while (k < n) {
        if (++guard > 10000) throw std::logic_error("reduction failed to terminate");
        for (std::size_t j = k; j-- > 0;) {
            Int q = round_nearest(mu[k][j]);
            if (sgn(q) != 0) {
                row_axpy(B[k], q, B[j]);
                gram(mu, Bn, gs);
            }
        }
        Rational lhs = Bn[k];
        Rational rhs = (make_rational(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * Bn[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(B[k], B[k - 1]);
            gram(mu, Bn, gs);
            k = k > 1 ? k - 1 : 1;
        }
    }
    return B;
}

IntRow shortest_vector(const IntMat& reduced) {
    if (reduced.empty()) throw std::invalid_argument("shortest vector of an empty basis");
    std::size_t n = reduced.size();
    if (n > 4) throw std::invalid_argument("bounded search supports rank <= 4");
    const int bound = 4;
    IntRow best;
    Int bestn = 0;
    std::vector<int> coef(n, -bound);
    while (true) {
        IntRow v(reduced[0].size(), 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t d = 0; d < v.size(); ++d) v[d] += Int(coef[i]) * reduced[i][d];
        Int nv = norm2(v);
        if (sgn(nv) != 0 && (best.empty() || cmp(nv, bestn) < 0)) {
            best = v;
            bestn = nv;
        }
        std::size_t pos = 0;
        while (pos < n && coef[pos] == bound) coef[pos++] = -bound;
        if (pos == n) break;
        ++coef[pos];
    }
    for (auto& x : best) { /* canonical sign */
        if (sgn(x) == 0) continue;
        if (sgn(x) < 0)
            for (auto& y : best) y = -y;
        break;
    }
    return best;
}

} // namespace qindex
