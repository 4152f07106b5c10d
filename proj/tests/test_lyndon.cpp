#include "gdop/lyndon.hpp"
#include "gdop/rational.hpp"

#include <doctest.h>

#include <random>

using namespace gdop;

namespace {
Word w(std::initializer_list<int> vars) {
    Word out;
    for (int v : vars) out.push_back(DWord{0, v});
    return out;
}
} // namespace

TEST_CASE("letter order is (derivations, variable) lexicographic") {
    CHECK(DWord{0, 2} < DWord{1, 1}); // any derived letter beats any underived one
    CHECK(DWord{1, 1} < DWord{1, 2});
    CHECK(DWord{1, 2} < DWord{2, 1});
    // fresh internal variables (index <= 0) sort below user variables
    CHECK(DWord{0, 0} < DWord{0, 1});
}

TEST_CASE("LS word recognition") {
    CHECK(is_ls_word(w({1})));
    CHECK(is_ls_word(w({2, 1})));
    CHECK_FALSE(is_ls_word(w({1, 2})));
    CHECK(is_ls_word(w({3, 1, 2})));
    CHECK_FALSE(is_ls_word(w({3, 2, 3}))); // rotation 3 3 2 is larger
    CHECK(is_ls_word(w({3, 3, 2})));
    CHECK_THROWS(is_ls_word(Word{}));
}

TEST_CASE("LS words on n distinct letters number (n-1)!") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<DWord> letters;
        for (int i = 1; i <= n; ++i) letters.push_back(DWord{0, i});
        CHECK(Integer(static_cast<long>(ls_words_on(letters).size())) ==
              factorial(static_cast<unsigned>(n - 1)));
    }
}

TEST_CASE("canonical bracketing expands triangularly") {
    // [W] = W + lexicographically smaller words, coefficient 1.
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        std::vector<DWord> letters;
        for (int i = 1; i <= n; ++i)
            letters.push_back(DWord{static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 4)});
        auto words = ls_words_on(letters);
        if (words.empty()) continue;
        const Word& W = words[rng() % words.size()];
        AssocPoly e = bracketing_expansion(W);
        CHECK(e.coeff(W) == 1);
        for (const auto& [word, c] : e.terms()) {
            (void)c;
            CHECK(compare_words(word, W) != std::strong_ordering::greater);
        }
    }
}

TEST_CASE("lie normal form: antisymmetry and Jacobi") {
    // [x2, x1] is already a basis element
    LiePoly b = lie_bracket(w({2}), w({1}));
    CHECK(b.size() == 1);
    CHECK(b.coeff(w({2, 1})) == 1);
    // [x1, x2] = -[x2 x1]
    LiePoly c = lie_bracket(w({1}), w({2}));
    CHECK(c.coeff(w({2, 1})) == -1);
    // Jacobi: [x1,[x2,x3]] + [x2,[x3,x1]] + [x3,[x1,x2]] = 0
    auto nested = [&](int a, int bb, int cc) {
        LiePoly inner = lie_bracket(w({bb}), w({cc}));
        LiePoly acc;
        for (const auto& [word, coef] : inner.terms()) {
            LiePoly part = lie_bracket(w({a}), word);
            part *= coef;
            acc += part;
        }
        return acc;
    };
    LiePoly jac = nested(1, 2, 3) + nested(2, 3, 1) + nested(3, 1, 2);
    CHECK(jac.is_zero());
    // [x, x] = 0
    CHECK(lie_bracket(w({1}), w({1})).is_zero());
}

TEST_CASE("lie normal form is idempotent on basis elements") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        std::vector<DWord> letters;
        for (int i = 1; i <= n; ++i) letters.push_back(DWord{static_cast<int>(rng() % 2), i});
        auto words = ls_words_on(letters);
        const Word& W = words[rng() % words.size()];
        LiePoly nf = lie_normal_form_assoc(bracketing_expansion(W));
        CHECK(nf.size() == 1);
        CHECK(nf.coeff(W) == 1);
    }
}

TEST_CASE("lie normal form of bracket terms") {
    Signature sig({{"lie", Symmetry::None}}, true); // formal bracket, no folding
    // [x2, x1] is already a basis element
    LiePoly a = lie_normal_form(parse_polynomial("1 (lie x2 x1)", sig), sig);
    CHECK(a.size() == 1);
    CHECK(a.coeff(w({2, 1})) == 1);
    // [x1, x2] -> -[x2 x1]
    LiePoly b = lie_normal_form(parse_polynomial("1 (lie x1 x2)", sig), sig);
    CHECK(b.size() == 1);
    CHECK(b.coeff(w({2, 1})) == -1);
    // Jacobi sums to zero
    LiePoly jac = lie_normal_form(
        parse_polynomial("1 (lie x1 (lie x2 x3)) + 1 (lie x2 (lie x3 x1)) + 1 (lie x3 (lie x1 x2))",
                         sig),
        sig);
    CHECK(jac.is_zero());
    // idempotent on a straightened element: re-normalizing the canonical
    // bracketing of each basis word returns exactly that word
    LiePoly c = lie_normal_form(parse_polynomial("1 (lie (lie x3 x1) x2)", sig), sig);
    Polynomial rebuilt;
    for (const auto& [word, coef] : c.terms())
        rebuilt += term_poly(canonical_bracketing(word, 0), sig, coef);
    CHECK(lie_normal_form(rebuilt, sig) == c);
}

TEST_CASE("derivation of a bracketed word obeys Leibniz") {
    // d[x2, x1] = [d x2, x1] + [x2, d x1]
    LiePoly d = lie_derive(w({2, 1}));
    LiePoly expected = lie_bracket(Word{DWord{1, 2}}, w({1}));
    expected += lie_bracket(w({2}), Word{DWord{1, 1}});
    CHECK(d == expected);
}
