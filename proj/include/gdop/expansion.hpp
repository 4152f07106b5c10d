/*
 * expansion.hpp
 * -------------
 * Expansion morphisms from two/three-operation signatures into free
 * differential algebras, and the identity verifier built on them.
 *
 *   gd          circ(x,y) -> x.d(y),   lie -> {,}          target PoisDer
 *   gd-dual     ast -> product,        star(x,y) -> d(x).y target ComDer
 *   derived     prec(x,y) -> x.d(y),   succ(x,y) -> d(x).y,
 *               mul -> product                             target magma/As/Com
 *   gen-derived ast -> product, circ(x,y) -> x.d(y),
 *               lie -> {,}, succ(x,y) -> {d(x),y}          target PoisDer
 *   bicom-dual  ast -> *, star(x,y) -> d(x) (.) y          target BiComDer
 *
 * Identities are formal polynomials: their source signatures carry no
 * symmetry flags, all identification happens in the target normal form.
 */
#pragma once

#include "gdop/bicom.hpp"
#include "gdop/comder.hpp"
#include "gdop/poisder.hpp"
#include "gdop/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gdop {

enum class DerivedTarget { Magma, Associative, Commutative };

// Source signatures used to parse identities for each map (no symmetry).
const Signature& gd_source_signature();          // circ, lie
const Signature& gd_dual_source_signature();     // ast, star
const Signature& derived_source_signature();     // prec, succ, mul
const Signature& gen_derived_source_signature(); // ast, circ, lie, succ

PoisPoly expand_gd(const Polynomial& p, const Signature& src);
ComPoly expand_gd_dual(const Polynomial& p, const Signature& src);
BiComPoly expand_bicom_dual(const Polynomial& p, const Signature& src);
PoisPoly expand_gen_derived(const Polynomial& p, const Signature& src);

using WordPoly = LinComb<Word, WordLess>;
WordPoly expand_derived_assoc(const Polynomial& p, const Signature& src);
ComPoly expand_derived_com(const Polynomial& p, const Signature& src);

// Free differential magmatic target; keys are terms over magder_signature().
const Signature& magder_signature();
Polynomial expand_derived_magma(const Polynomial& p, const Signature& src);

// Negative-control target: commutative product, derivation, but a bracket
// with no antisymmetry (or any other law). Keys over loose_signature().
const Signature& loose_signature();
Polynomial expand_gd_loose(const Polynomial& p, const Signature& src);

struct Verdict {
    bool holds = false;
    std::size_t surviving_count = 0;
    std::vector<std::string> survivors; // "coeff monomial" lines, normal form
};

// p must be multilinear. map is one of gd, gd-dual, derived, gen-derived,
// bicom-dual, gd-loose; target applies to `derived` only.
Verdict verify_identity(const Polynomial& p, const Signature& src, const std::string& map,
                        DerivedTarget target = DerivedTarget::Magma);

// Weight of a term under per-operation increments (wt(x) = -1, d adds 1,
// op with increment k adds k).
int term_weight(const Term& t, const std::vector<int>& op_increment);

} // namespace gdop
