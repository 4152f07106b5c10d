/*
 * lyndon.hpp
 * ----------
 * Lyndon-Shirshov words over the differential alphabet d^w X = {d^s(x)} and
 * the canonical Lie bracketing. Letters are compared as pairs (s, x),
 * lexicographically, so every derived letter is greater than every underived
 * one. Words of different lengths compare lexicographically with the proper
 * prefix smaller.
 *
 * Convention (maximal-rotation): a word U is Lyndon-Shirshov when U > U2U1
 * for every factorization U = U1U2 with both parts nonempty; LS words begin
 * with their greatest letter. The canonical bracketing splits [U] = [[U'][U'']]
 * at the longest proper LS suffix U''. Canonically bracketed LS words form a
 * linear basis of the free Lie algebra; expanding [U] in the free associative
 * algebra gives U as the unique greatest monomial, with coefficient 1, which
 * is what lie_normal_form's straightening loop peels on. That leading-word
 * triangularity is also the termination argument: each iteration strictly
 * lowers the greatest associative word present.
 */
#pragma once

#include "gdop/lincomb.hpp"
#include "gdop/polynomial.hpp"
#include "gdop/term.hpp"

#include <compare>
#include <vector>

namespace gdop {

// One letter d^s(x) of the differential alphabet.
struct DWord {
    int s = 0;   // derivation count, >= 0
    int var = 1; // variable index; <= 0 marks internal fresh variables

    auto operator<=>(const DWord&) const = default;
};

using Word = std::vector<DWord>; // associative word in d^w X

std::strong_ordering compare_words(const Word& a, const Word& b);
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        return compare_words(a, b) == std::strong_ordering::less;
    }
};

int d_degree(const Word& w);

bool is_ls_word(const Word& w);

// Lie polynomials in straightened form: rational combinations of LS words,
// each word standing for its canonical bracketing.
using LiePoly = LinComb<Word, WordLess>;

// Associative polynomials (free associative algebra on d^w X).
using AssocPoly = LinComb<Word, WordLess>;

// The canonical bracketing of an LS word as a Term over the given lie
// operation index; letters become d-chains on variable leaves.
Term canonical_bracketing(const Word& w, int lie_op);

// Split positions of the canonical bracketing: [w] = [[w_left][w_right]].
std::pair<Word, Word> standard_split(const Word& w);

// Expansion of the canonical bracketing of an LS word in the free
// associative algebra.
AssocPoly bracketing_expansion(const Word& w);

// Straighten an associative expansion of a Lie element to the LS basis.
// Throws if the input is not a Lie element (leading word not LS).
LiePoly lie_normal_form_assoc(AssocPoly p);

// Normal form of a polynomial of Lie terms (bracket nodes over d-chain
// leaves) in the LS basis; linear, idempotent on basis elements.
LiePoly lie_normal_form(const Polynomial& p, const Signature& sig);

// Bracket of two canonically bracketed LS words, straightened.
LiePoly lie_bracket(const Word& a, const Word& b);
LiePoly lie_bracket(const LiePoly& a, const LiePoly& b);

// Derivation applied to a canonically bracketed LS word, straightened.
LiePoly lie_derive(const Word& w);

// All LS words using each of the given letters exactly once.
std::vector<Word> ls_words_on(const std::vector<DWord>& letters);

} // namespace gdop
