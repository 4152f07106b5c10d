/*
 * polynomial.hpp
 * --------------
 * Polynomials of terms: formal rational combinations of canonical term keys.
 * Construction routes every term through canonicalize(), so symmetric /
 * antisymmetric argument orders are identified (with signs) at insertion
 * time and component dimensions come out minimal.
 */
#pragma once

#include "gdop/lincomb.hpp"
#include "gdop/perm.hpp"
#include "gdop/signature.hpp"
#include "gdop/term.hpp"

#include <map>
#include <string>
#include <vector>

namespace gdop {

using Polynomial = LinComb<Term, TermLess>;

// c * t as a canonical-key polynomial.
Polynomial term_poly(const Term& t, const Signature& sig, Rational c = Rational(1));

// Simultaneous substitution of terms for variables; every variable of t must
// be assigned.
Term substitute(const Term& t, const std::map<int, Term>& assignment);

// Substitute polynomials for variables in a monomial term, distributing
// multilinearly. Every assigned variable must occur at most once in t.
Polynomial substitute_poly(const Term& t, const std::map<int, Polynomial>& assignment,
                           const Signature& sig);
Polynomial substitute_poly(const Polynomial& p, const std::map<int, Polynomial>& assignment,
                           const Signature& sig);

// True iff every monomial of p contains each of x1..xn exactly once and no
// other variables (and no derivation nodes).
bool is_multilinear(const Polynomial& p, int n);
int multilinear_degree(const Polynomial& p); // -1 if not multilinear

// Relabel x_i -> x_{perm(i)} in every monomial of a multilinear polynomial
// of degree perm.n(), then re-canonicalize.
Polynomial act_permutation(const Polynomial& p, const Permutation& perm, const Signature& sig);

// All derivation-free multilinear terms of degree n over the signature, as
// canonical keys, deterministically ordered (ascending in the term order).
std::vector<Term> multilinear_monomials(const Signature& sig, int n);

std::string print_polynomial(const Polynomial& p, const Signature& sig);

// Grammar: coeff term [+ coeff term ...], coeff an integer or p/q.
Polynomial parse_polynomial(const std::string& text, const Signature& sig);

} // namespace gdop
