/*
 * rational.hpp
 * ------------
 * Exact rational coefficients. Everything in this library is computed over Q
 * with no floating point: ranks, kernels and membership certificates would be
 * meaningless otherwise. Backed by GMP.
 */
#pragma once

#include <gmpxx.h>
#include <string>

namespace gdop {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

} // namespace gdop
