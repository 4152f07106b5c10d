/*
 * poisder.hpp
 * -----------
 * The free differential Poisson algebra PoisDer<X,d> = Pois<d^w X>. Normal
 * monomials are commutative products of canonically bracketed Lyndon-Shirshov
 * words over d^w X, with the factor sequence sorted ascending. Rewriting to
 * normal form applies, innermost first:
 *   - d via the Leibniz rule on both products,
 *   - {x, yz} = {x,y}z + y{x,z} to eject commutative factors from brackets,
 *   - LS straightening of pure Lie factors.
 * Each step strictly lowers the multiset of leading associative words, so the
 * rewriting terminates; the result is zero iff the input is zero in
 * PoisDer<X,d>.
 */
#pragma once

#include "gdop/lincomb.hpp"
#include "gdop/lyndon.hpp"
#include "gdop/polynomial.hpp"
#include "gdop/signature.hpp"

#include <string>
#include <vector>

namespace gdop {

struct PoisMonomial {
    std::vector<Word> factors; // sorted ascending, each an LS word

    auto operator<=>(const PoisMonomial& o) const {
        std::size_t n = std::min(factors.size(), o.factors.size());
        for (std::size_t i = 0; i < n; ++i) {
            auto c = compare_words(factors[i], o.factors[i]);
            if (c != std::strong_ordering::equal) return c;
        }
        if (factors.size() == o.factors.size()) return std::strong_ordering::equal;
        return factors.size() < o.factors.size() ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
    }
    bool operator==(const PoisMonomial& o) const { return factors == o.factors; }
};

using PoisPoly = LinComb<PoisMonomial>;

PoisMonomial pois_monomial(std::vector<Word> factors); // sorts
PoisPoly pois_var(int index);

PoisPoly pois_mul(const PoisPoly& a, const PoisPoly& b);
PoisPoly pois_bracket(const PoisPoly& a, const PoisPoly& b);
PoisPoly pois_d(const PoisPoly& a);

int pois_weight(const PoisMonomial& m); // wt(x)=-1, d adds 1, bracket adds 1, product adds 0
int pois_d_degree(const PoisMonomial& m);

// Evaluate a term over ops {mul, lie} (+ d) into normal form. The op indices
// of the Poisson signature are passed explicitly; pass -1 for an op the term
// must not contain.
PoisPoly poisder_eval(const Term& t, int mul_op, int lie_op);
PoisPoly poisder_normal_form(const Polynomial& p, const Signature& sig);

// Replace the (underived) variable `var` by `value` everywhere, extending
// homomorphically; d^k(var) becomes d^k(value).
PoisPoly poisder_substitute(const PoisPoly& p, int var, const PoisPoly& value);

// The standard Poisson-differential signature {mul symmetric, lie antisym}, d.
const Signature& poisder_signature();

std::string print_pois_monomial(const PoisMonomial& m);
std::string print_pois_poly(const PoisPoly& p);

// The monomial as a term over the Poisson signature (right-combed product of
// canonically bracketed factors); normalizing it again returns the monomial.
Term pois_monomial_term(const PoisMonomial& m, const Signature& sig);

// Parse "(pm factor*)": factors are lie/d terms whose product must evaluate
// to a single normal monomial with coefficient 1.
PoisMonomial parse_pois_monomial(const std::string& text);

} // namespace gdop
