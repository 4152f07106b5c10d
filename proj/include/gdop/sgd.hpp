/*
 * sgd.hpp
 * -------
 * Weight-graded basis combinatorics for the free special GD-algebra inside
 * PoisDer<X,d>, and the constructive pre-image along the expansion
 * circ(x,y) -> x.d(y), lie -> {,}.
 *
 * H(n,1) = 1 and, for k >= 2, H(n,k) is the elementary symmetric function
 * e_{k-1}(1, 1/2, ..., 1/(n-1)). L(n,k) = (n-1)! H(n,k) counts products of k
 * sorted Lyndon-Shirshov factors on n distinct letters, and
 *     dim SGD(n) = sum_k (n+k-2)!/(k-1)! H(n,k)
 * counts the multilinear weight -1 normal monomials: a product of k sorted
 * LS factors with k-1 derivations distributed over the n letters. The
 * enumeration below builds exactly those monomials, so agreeing counts are a
 * two-route check of the same dimension.
 *
 * The pre-image construction is recursive:
 *   - pure Lie factors lift by renaming {,} to the bracket;
 *   - F(x_1..x_t, [W]) with D(W) = t peels the standard split
 *     [W] = {[d^s(y)u],[v]} by the Leibniz identity, introducing a fresh
 *     variable (smaller than all others) for the already-lifted part;
 *   - the one-letter case x_1..x_t d^t(y) is solved by bounded search over
 *     Novikov monomials on t+1 variables (exact linear solve);
 *   - at the top level one derived factor is combined with D-many
 *     derivation-free factors, lifted, and replaced by a fresh variable.
 * Every returned pre-image is verified on construction by re-expansion.
 */
#pragma once

#include "gdop/bicom.hpp"
#include "gdop/comder.hpp"
#include "gdop/poisder.hpp"
#include "gdop/polynomial.hpp"
#include "gdop/rational.hpp"

#include <vector>

namespace gdop {

// The signature GD terms are written over: circ (no symmetry), lie
// (antisymmetric), no derivation.
const Signature& gd_term_signature();

Rational harmonic_H(int n, int k);
Integer lyndon_count_L(int n, int k);
Integer sgd_dim(int n);

// Brute-force count of products of k sorted LS factors on x1..xn.
Integer ls_factorization_count(int n, int k);

enum class WeightTarget { Sgd, GdDual, GdDualBicom };

std::vector<PoisMonomial> enumerate_sgd_monomials(int n);     // weight -1, PoisDer
std::vector<ComMonomial> enumerate_gd_dual_monomials(int n);  // weight <= -1, ComDer
std::vector<BiComMonomial> enumerate_gd_dual_bicom_monomials(int n); // weight -1, BiComDer

// Pre-image of a multilinear weight -1 normal monomial under the expansion;
// verified by re-expansion before returning.
Polynomial gd_preimage(const PoisMonomial& a);

} // namespace gdop
