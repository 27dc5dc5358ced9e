#include "qindex/polynomial.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>

namespace qindex {

// ---- VarTable ----

VarTablePtr VarTable::make(const std::vector<std::pair<std::string, int>>& vars) {
    std::vector<std::string> names;
    std::vector<int> degrees;
    names.reserve(vars.size());
    degrees.reserve(vars.size());
    std::string key;
    for (const auto& [n, d] : vars) {
        if (n.empty()) throw DomainError("empty variable name");
        if (d <= 0 || d % 2 != 0) throw DomainError("variable degree must be a positive even integer: " + n);
        if (std::find(names.begin(), names.end(), n) != names.end())
            throw DomainError("duplicate variable name: " + n);
        names.push_back(n);
        degrees.push_back(d);
        key += n + "#" + std::to_string(d) + ";";
    }

    static std::mutex mu;
    static std::map<std::string, std::weak_ptr<const VarTable>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(key);
    if (it != registry.end()) {
        if (auto sp = it->second.lock()) return sp;
    }
    VarTablePtr vt(new VarTable(std::move(names), std::move(degrees)));
    registry[key] = vt;
    return vt;
}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

bool VarTable::same_as(const VarTable& other) const {
    return this == &other || (names_ == other.names_ && degrees_ == other.degrees_);
}

// ---- Monomial ----

bool Monomial::is_one() const {
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

int Monomial::degree(const VarTable& vt) const {
    int d = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) d += exps[i] * vt.degree(i);
    return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += b.exps[i];
    return r;
}

bool mono_divides(const Monomial& divisor, const Monomial& m) {
    for (std::size_t i = 0; i < m.exps.size(); ++i)
        if (divisor.exps[i] > m.exps[i]) return false;
    return true;
}

Monomial mono_div(const Monomial& m, const Monomial& divisor) {
    Monomial r = m;
    for (std::size_t i = 0; i < r.exps.size(); ++i) {
        r.exps[i] -= divisor.exps[i];
        if (r.exps[i] < 0) throw DomainError("monomial division with negative exponent");
    }
    return r;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(*vt), db = b.degree(*vt);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.exps.begin(), a.exps.end(), b.exps.begin(), b.exps.end());
}

// ---- GradedPolynomial ----

GradedPolynomial::GradedPolynomial(VarTablePtr vars, std::optional<int> cap)
    : vars_(std::move(vars)), cap_(cap), terms_(GrlexLess{vars_.get()}) {
    if (!vars_) throw DomainError("polynomial without a variable table");
}

GradedPolynomial GradedPolynomial::zero(VarTablePtr vars, std::optional<int> cap) {
    return GradedPolynomial(std::move(vars), cap);
}

GradedPolynomial GradedPolynomial::constant(VarTablePtr vars, const Rational& c, std::optional<int> cap) {
    GradedPolynomial p(std::move(vars), cap);
    p.add_term(Monomial::one(p.vars_->size()), c);
    return p;
}

GradedPolynomial GradedPolynomial::variable(VarTablePtr vars, std::string_view name, std::optional<int> cap) {
    GradedPolynomial p(std::move(vars), cap);
    auto idx = p.vars_->find(name);
    if (!idx) throw DomainError(std::string("unknown variable: ") + std::string(name));
    Monomial m = Monomial::one(p.vars_->size());
    m.exps[*idx] = 1;
    p.add_term(m, Rational(1));
    return p;
}

Rational GradedPolynomial::constant_term() const {
    return coeff(Monomial::one(vars_->size()));
}

Rational GradedPolynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GradedPolynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.exps.size() != vars_->size()) throw GradingMismatch("monomial arity mismatch");
    if (sgn(c) == 0) return;
    if (cap_ && m.degree(*vars_) > *cap_) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

std::pair<Monomial, Rational> GradedPolynomial::leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

std::optional<int> GradedPolynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree(*vars_);
}

std::optional<int> GradedPolynomial::min_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree(*vars_);
}

GradedPolynomial GradedPolynomial::homogeneous_part(int d) const {
    GradedPolynomial r(vars_, cap_);
    for (const auto& [m, c] : terms_)
        if (m.degree(*vars_) == d) r.add_term(m, c);
    return r;
}

GradedPolynomial GradedPolynomial::with_cap(std::optional<int> cap) const {
    GradedPolynomial r(vars_, cap);
    for (const auto& [m, c] : terms_) r.add_term(m, c);
    return r;
}

namespace {

std::optional<int> merge_caps(const std::optional<int>& a, const std::optional<int>& b) {
    if (a && b) return std::min(*a, *b);
    return a ? a : b;
}

void require_same_vars(const GradedPolynomial& a, const GradedPolynomial& b) {
    if (!a.vars()->same_as(*b.vars())) throw GradingMismatch("operands over different variable tables");
}

} // namespace

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& o) {
    require_same_vars(*this, o);
    auto cap = merge_caps(cap_, o.cap_);
    if (cap != cap_) {
        *this = with_cap(cap);
    }
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& o) {
    require_same_vars(*this, o);
    auto cap = merge_caps(cap_, o.cap_);
    if (cap != cap_) {
        *this = with_cap(cap);
    }
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

GradedPolynomial GradedPolynomial::operator-() const {
    GradedPolynomial r(vars_, cap_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

GradedPolynomial operator*(const Rational& c, GradedPolynomial p) {
    if (sgn(c) == 0) return GradedPolynomial::zero(p.vars(), p.cap());
    GradedPolynomial r(p.vars(), p.cap());
    for (const auto& [m, co] : p.terms()) r.add_term(m, c * co);
    return r;
}

bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
    if (!a.vars()->same_as(*b.vars())) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (!(ia->first == ib->first)) return false;
        if (ia->second != ib->second) return false;
    }
    return true;
}

bool is_homogeneous_of(const GradedPolynomial& p, int d) {
    for (const auto& [m, c] : p.terms())
        if (m.degree(*p.vars()) != d) return false;
    return true;
}

// ---- multiplication kernels ----

namespace {

std::atomic<bool> g_parallel{true};

struct FlatTerm {
    const Monomial* m;
    const Rational* c;
    int deg;
};

std::vector<FlatTerm> flatten(const GradedPolynomial& p) {
    std::vector<FlatTerm> v;
    v.reserve(p.term_count());
    for (const auto& [m, c] : p.terms()) v.push_back({&m, &c, m.degree(*p.vars())});
    return v;
}

} // namespace

void set_parallel_enabled(bool on) { g_parallel.store(on); }
bool parallel_enabled() { return g_parallel.load(); }

GradedPolynomial mul_serial(const GradedPolynomial& a, const GradedPolynomial& b) {
    require_same_vars(a, b);
    auto cap = merge_caps(a.cap(), b.cap());
    GradedPolynomial r(a.vars(), cap);
    auto bs = flatten(b); // map iteration is degree-ascending, so we can break at the cap
    for (const auto& [am, ac] : a.terms()) {
        int ad = am.degree(*a.vars());
        for (const auto& bt : bs) {
            if (cap && ad + bt.deg > *cap) break;
            r.add_term(mono_mul(am, *bt.m), ac * *bt.c);
        }
    }
    return r;
}

GradedPolynomial mul_parallel(const GradedPolynomial& a, const GradedPolynomial& b) {
#ifndef _OPENMP
    return mul_serial(a, b);
#else
    require_same_vars(a, b);
    auto cap = merge_caps(a.cap(), b.cap());
    auto as = flatten(a);
    auto bs = flatten(b);
    int nthreads = omp_get_max_threads();
    if (nthreads <= 1 || as.size() < 2) return mul_serial(a, b);

    std::vector<GradedPolynomial> partial;
    partial.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) partial.push_back(GradedPolynomial::zero(a.vars(), cap));

#pragma omp parallel num_threads(nthreads)
    {
        int tid = omp_get_thread_num();
        GradedPolynomial& local = partial[tid];
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < (std::ptrdiff_t)as.size(); ++i) {
            const auto& at = as[i];
            for (const auto& bt : bs) {
                if (cap && at.deg + bt.deg > *cap) break;
                local.add_term(mono_mul(*at.m, *bt.m), *at.c * *bt.c);
            }
        }
    }

    // deterministic merge: exact addition is associative and commutative,
    // so the result is bit-identical to the serial kernel
    GradedPolynomial r = GradedPolynomial::zero(a.vars(), cap);
    for (auto& p : partial) r += p;
    return r;
#endif
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
    constexpr std::size_t kParallelWork = 1u << 16;
#ifdef _OPENMP
    if (parallel_enabled() && omp_get_max_threads() > 1 &&
        a.term_count() * b.term_count() >= kParallelWork)
        return mul_parallel(a, b);
#endif
    return mul_serial(a, b);
}

GradedPolynomial pow_trunc(const GradedPolynomial& p, int n, std::optional<int> cap) {
    if (n < 0) throw DomainError("negative polynomial power");
    auto ecap = merge_caps(p.cap(), cap);
    GradedPolynomial r = GradedPolynomial::constant(p.vars(), Rational(1), ecap);
    GradedPolynomial base = p.with_cap(ecap);
    int e = n;
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

// ---- division and series ----

GradedPolynomial exact_divide(const GradedPolynomial& num, const GradedPolynomial& den) {
    require_same_vars(num, den);
    if (den.is_zero()) throw DomainError("division by zero polynomial");
    auto ecap = merge_caps(num.cap(), den.cap());
    auto [dm, dc] = den.leading_term();
    int ddeg = dm.degree(*den.vars());

    GradedPolynomial r = num.with_cap(ecap);
    std::optional<int> qcap = ecap ? std::optional<int>(*ecap - ddeg) : std::nullopt;
    GradedPolynomial q(num.vars(), qcap);
    GradedPolynomial d = den.with_cap(ecap);

    while (!r.is_zero()) {
        auto [rm, rc] = r.leading_term();
        if (!mono_divides(dm, rm))
            throw NotDivisible("exact_divide: remainder leading term not divisible by divisor");
        Monomial t = mono_div(rm, dm);
        Rational tc = rc / dc;
        q.add_term(t, tc);
        GradedPolynomial sub(num.vars(), ecap);
        for (const auto& [m, c] : d.terms()) sub.add_term(mono_mul(m, t), c * tc);
        r -= sub;
    }
    return q;
}

GradedPolynomial series_exp(const GradedPolynomial& x, int cap) {
    if (sgn(x.constant_term()) != 0) throw DomainError("series_exp needs zero constant term");
    GradedPolynomial xt = x.with_cap(merge_caps(x.cap(), cap));
    GradedPolynomial r = GradedPolynomial::constant(x.vars(), Rational(1), xt.cap());
    GradedPolynomial term = r;
    for (int n = 1; ; ++n) {
        term = term * xt;
        term = make_rational(1, n) * term;
        if (term.is_zero()) break;
        r += term;
    }
    return r;
}

GradedPolynomial series_invert(const GradedPolynomial& s, int cap) {
    Rational c = s.constant_term();
    if (sgn(c) == 0) throw DomainError("series_invert needs nonzero constant term");
    auto ecap = merge_caps(s.cap(), cap);
    Rational cinv = Rational(1) / c;

    // split s into homogeneous layers, then solve degree by degree
    std::map<int, GradedPolynomial> layers;
    for (const auto& [m, co] : s.terms()) {
        int d = m.degree(*s.vars());
        if (d == 0 || d > *ecap) continue;
        auto it = layers.find(d);
        if (it == layers.end())
            it = layers.emplace(d, GradedPolynomial::zero(s.vars(), ecap)).first;
        it->second.add_term(m, co);
    }

    std::map<int, GradedPolynomial> t;
    t.emplace(0, GradedPolynomial::constant(s.vars(), cinv, ecap));
    GradedPolynomial r = t.at(0);
    for (int d = 1; d <= *ecap; ++d) {
        GradedPolynomial acc = GradedPolynomial::zero(s.vars(), ecap);
        for (const auto& [e, se] : layers) {
            if (e > d) break;
            auto it = t.find(d - e);
            if (it == t.end()) continue;
            acc += se * it->second;
        }
        if (acc.is_zero()) continue;
        GradedPolynomial td = (-cinv) * acc;
        r += td;
        t.emplace(d, std::move(td));
    }
    return r;
}

GradedPolynomial substitute(const GradedPolynomial& p,
                            const std::map<std::string, GradedPolynomial>& assignment,
                            std::optional<int> cap,
                            VarTablePtr target) {
    const VarTable& vt = *p.vars();

    // images indexed by source variable, only for variables that occur
    std::vector<const GradedPolynomial*> image(vt.size(), nullptr);
    for (const auto& [m, c] : p.terms()) {
        (void)c;
        for (std::size_t i = 0; i < vt.size(); ++i) {
            if (m.exps[i] > 0 && !image[i]) {
                auto it = assignment.find(vt.name(i));
                if (it == assignment.end())
                    throw DomainError("substitute: no image for variable " + vt.name(i));
                image[i] = &it->second;
            }
        }
    }

    if (!target) {
        for (const auto* img : image)
            if (img) { target = img->vars(); break; }
        if (!target && !assignment.empty()) target = assignment.begin()->second.vars();
        if (!target) throw DomainError("substitute: target variable table undeterminable");
    }

    auto ecap = merge_caps(p.cap(), cap);
    for (std::size_t i = 0; i < vt.size(); ++i) {
        if (!image[i]) continue;
        if (!image[i]->vars()->same_as(*target))
            throw GradingMismatch("substitute: images over different variable tables");
        if (!image[i]->is_zero() && !is_homogeneous_of(*image[i], vt.degree(i)))
            throw GradingMismatch("substitute: image of " + vt.name(i) +
                                  " is not homogeneous of degree " + std::to_string(vt.degree(i)));
        ecap = merge_caps(ecap, image[i]->cap());
    }

    // memoized powers per variable
    std::vector<std::vector<GradedPolynomial>> powers(vt.size());
    auto power = [&](std::size_t i, int e) -> const GradedPolynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(GradedPolynomial::constant(target, Rational(1), ecap));
        while ((int)cache.size() <= e) cache.push_back(cache.back() * image[i]->with_cap(ecap));
        return cache[e];
    };

    GradedPolynomial r = GradedPolynomial::zero(target, ecap);
    for (const auto& [m, c] : p.terms()) {
        if (ecap && m.degree(vt) > *ecap) continue;
        GradedPolynomial termval = GradedPolynomial::constant(target, c, ecap);
        for (std::size_t i = 0; i < vt.size() && !termval.is_zero(); ++i)
            if (m.exps[i] > 0) termval = termval * power(i, m.exps[i]);
        r += termval;
    }
    return r;
}

std::string debug_string(const GradedPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        Rational a = abs(c);
        bool printed_coeff = false;
        if (a != 1 || m.is_one()) {
            os << to_string(a);
            printed_coeff = true;
        }
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (printed_coeff) os << "*";
            printed_coeff = true;
            os << p.vars()->name(i);
            if (m.exps[i] > 1) os << "^" << m.exps[i];
        }
    }
    return os.str();
}

} // namespace qindex
