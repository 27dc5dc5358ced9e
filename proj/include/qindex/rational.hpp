#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qindex {

using Int = mpz_class;
using Rational = mpq_class;

// mpq_class(n, d) does not reduce, so every fraction goes through here.
inline Rational make_rational(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

// decimal strings, as used by the JSON formats
inline Rational rational_from_strings(const std::string& num, const std::string& den) {
    Int n, d;
    if (n.set_str(num, 10) != 0) throw std::domain_error("bad integer string: " + num);
    if (d.set_str(den, 10) != 0) throw std::domain_error("bad integer string: " + den);
    return make_rational(n, d);
}

inline Rational rational_pow(const Rational& q, unsigned e) {
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r *= q;
    return r;
}

inline Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

} // namespace qindex
