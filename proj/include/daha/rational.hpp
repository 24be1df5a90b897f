#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "daha/errors.hpp"

namespace daha {

// Exact rational arithmetic is delegated to GMP throughout; nothing in the
// engine ever touches floating point.
using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
    if (!is_integer(r)) throw DomainError("rational is not an integer: " + r.get_str());
    return static_cast<long>(r.get_num().get_si());
}

// gcd on rationals: gcd of numerators over lcm of denominators.  Used for
// extracting numeric content from polynomials.
inline Rational rat_gcd(const Rational& a, const Rational& b) {
    mpz_class gn, ld;
    mpz_gcd(gn.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(ld.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    Rational r(gn, ld);
    r.canonicalize();
    return r;
}

inline long lcm_long(long a, long b) {
    mpz_class l;
    mpz_class za(a), zb(b);
    mpz_lcm(l.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
    return static_cast<long>(l.get_si());
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

// r^e for integer e (negative allowed when r != 0).
inline Rational rat_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0) {
        if (e < 0) throw DivisionByZero("0 raised to negative power");
        return Rational(0);
    }
    mpz_class num, den;
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), r.get_num().get_mpz_t(), ae);
    mpz_pow_ui(den.get_mpz_t(), r.get_den().get_mpz_t(), ae);
    Rational out = (e > 0) ? Rational(num, den) : Rational(den, num);
    out.canonicalize();
    return out;
}

using RatVec = std::vector<Rational>;

inline Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace daha
