#pragma once

#include "qindex/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qindex {

struct GradingMismatch : std::runtime_error { using std::runtime_error::runtime_error; };
struct NotDivisible : std::runtime_error { using std::runtime_error::runtime_error; };
struct DomainError : std::runtime_error { using std::runtime_error::runtime_error; };

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

// Declared variable list with even cohomological degrees. Immutable and
// interned: equal declarations share one instance, so comparator pointers
// from different construction sites agree.
class VarTable {
public:
    static VarTablePtr make(const std::vector<std::pair<std::string, int>>& vars);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    int degree(std::size_t i) const { return degrees_[i]; }
    std::optional<std::size_t> find(std::string_view name) const;
    bool same_as(const VarTable& other) const;

private:
    VarTable(std::vector<std::string> names, std::vector<int> degrees)
        : names_(std::move(names)), degrees_(std::move(degrees)) {}
    std::vector<std::string> names_;
    std::vector<int> degrees_;
};

struct Monomial {
    std::vector<int> exps;

    static Monomial one(std::size_t nvars) { return Monomial{std::vector<int>(nvars, 0)}; }
    bool is_one() const;
    int degree(const VarTable& vt) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& divisor, const Monomial& m);
Monomial mono_div(const Monomial& m, const Monomial& divisor);

// graded lexicographic: total cohomological degree first, then lex with the
// earlier-declared variable more significant (higher exponent = larger)
struct GrlexLess {
    const VarTable* vt = nullptr;
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse polynomial with exact rational coefficients over a VarTable.
// An optional cap means: terms of cohomological degree > cap are unknown and
// are dropped on insertion. Binary operations merge caps to the minimum.
class GradedPolynomial {
public:
    using Terms = std::map<Monomial, Rational, GrlexLess>;

    explicit GradedPolynomial(VarTablePtr vars, std::optional<int> cap = std::nullopt);

    static GradedPolynomial zero(VarTablePtr vars, std::optional<int> cap = std::nullopt);
    static GradedPolynomial constant(VarTablePtr vars, const Rational& c,
                                     std::optional<int> cap = std::nullopt);
    static GradedPolynomial variable(VarTablePtr vars, std::string_view name,
                                     std::optional<int> cap = std::nullopt);

    const VarTablePtr& vars() const { return vars_; }
    const std::optional<int>& cap() const { return cap_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    Rational constant_term() const;
    Rational coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);
    std::pair<Monomial, Rational> leading_term() const; // grlex-largest; poly must be nonzero

    std::optional<int> degree() const;     // max term degree, nullopt if zero
    std::optional<int> min_degree() const;

    GradedPolynomial homogeneous_part(int d) const;
    GradedPolynomial with_cap(std::optional<int> cap) const;

    GradedPolynomial& operator+=(const GradedPolynomial& o);
    GradedPolynomial& operator-=(const GradedPolynomial& o);
    GradedPolynomial operator-() const;

    friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { a += b; return a; }
    friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { a -= b; return a; }
    friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);
    friend GradedPolynomial operator*(const Rational& c, GradedPolynomial p);
    friend GradedPolynomial operator*(GradedPolynomial p, const Rational& c) { return c * std::move(p); }

    // value equality: same variable declarations and same terms (caps ignored)
    friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b);
    friend bool operator!=(const GradedPolynomial& a, const GradedPolynomial& b) { return !(a == b); }

private:
    VarTablePtr vars_;
    std::optional<int> cap_;
    Terms terms_;
};

bool is_homogeneous_of(const GradedPolynomial& p, int d);

// multiplication kernels; operator* dispatches on size and the global switch
GradedPolynomial mul_serial(const GradedPolynomial& a, const GradedPolynomial& b);
GradedPolynomial mul_parallel(const GradedPolynomial& a, const GradedPolynomial& b);
void set_parallel_enabled(bool on);
bool parallel_enabled();

GradedPolynomial pow_trunc(const GradedPolynomial& p, int n, std::optional<int> cap = std::nullopt);

// quotient q with q*den == num exactly (up to the merged cap); throws NotDivisible
GradedPolynomial exact_divide(const GradedPolynomial& num, const GradedPolynomial& den);

// truncated exp of a polynomial with zero constant term
GradedPolynomial series_exp(const GradedPolynomial& x, int cap);

// truncated multiplicative inverse of a series with nonzero constant term
GradedPolynomial series_invert(const GradedPolynomial& s, int cap);

// homogeneous-degree-preserving substitution: every variable occurring in p
// must be assigned an image that is zero or homogeneous of the same degree
GradedPolynomial substitute(const GradedPolynomial& p,
                            const std::map<std::string, GradedPolynomial>& assignment,
                            std::optional<int> cap = std::nullopt,
                            VarTablePtr target = nullptr);

std::string debug_string(const GradedPolynomial& p);

} // namespace qindex
