/*
 * hurwitz.hpp
 * -----------
 * The divided-power Hurwitz line H = span{x^(n), n >= 0} with
 *     x^(n) * x^(m)  = binom(n+m, m)   x^(n+m)
 *     x^(n) star x^(m) = binom(n+m-1, m) x^(n+m-1)   (zero when n = 0).
 * Over the free differential magmatic algebra A truncated by d^N = 0 on the
 * generators, the map
 *     Phi(a) = sum_s d^s(a) (x) x^(s)
 * is a finite sum into A (x) H and preserves prec, succ and the plain
 * product when those are read through the componentwise rules
 * (a(x)f) succ (b(x)g) = ab (x) (f star g), prec with the factors of star
 * swapped, product with *. The check compares both sides exactly, component
 * by component; only A is truncated (cutting the Hurwitz indices themselves
 * would drop products that a later star brings back into range).
 */
#pragma once

#include "gdop/polynomial.hpp"
#include "gdop/rational.hpp"

#include <string>

namespace gdop {

struct HurwitzVerdict {
    bool holds = false;
    std::string mismatch; // one differing component when holds is false
};

// t is a term over the derived source signature {prec, succ, mul}.
// Requires N >= (number of prec/succ nodes in t) + 1, else throws
// (truncation too small).
HurwitzVerdict hurwitz_phi_check(const Term& t, const Signature& src, int N);

} // namespace gdop
