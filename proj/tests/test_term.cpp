#include "gdop/builtins.hpp"
#include "gdop/poisder.hpp"
#include "gdop/polynomial.hpp"

#include <doctest.h>

#include <functional>
#include <random>
#include <set>

using namespace gdop;

namespace {
const Signature& gd_sig() {
    static const Signature sig({{"circ", Symmetry::None}, {"lie", Symmetry::Antisymmetric}},
                               false);
    return sig;
}
} // namespace

TEST_CASE("parser basics") {
    Term t = parse_term("(circ x1 x2)", gd_sig());
    CHECK(t.kind() == Term::Kind::App);
    CHECK(print_term(t, gd_sig()) == "(circ x1 x2)");

    Term u = parse_term("(lie (circ x1 x2) x3)", gd_sig());
    CHECK(print_term(u, gd_sig()) == "(lie (circ x1 x2) x3)");

    CHECK_THROWS_AS(parse_term("(circ x1)", gd_sig()), ParseError);
    CHECK_THROWS_AS(parse_term("(frob x1 x2)", gd_sig()), ParseError);
    CHECK_THROWS_AS(parse_term("(d x1)", gd_sig()), ParseError); // no derivation here
    CHECK(parse_term("(d x1)", poisder_signature()).kind() == Term::Kind::Der);
}

TEST_CASE("printer round-trips byte-identically") {
    std::mt19937 rng(7);
    const Signature& sig = poisder_signature();
    for (int i = 0; i < 200; ++i) {
        // random small term
        std::function<Term(int)> gen = [&](int depth) -> Term {
            int r = static_cast<int>(rng() % 10);
            if (depth > 3 || r < 4) return Term::var(static_cast<int>(rng() % 5) + 1);
            if (r < 6) return Term::der(gen(depth + 1));
            return Term::app(static_cast<int>(rng() % 2), gen(depth + 1), gen(depth + 1));
        };
        Term t = gen(0);
        std::string s = print_term(t, sig);
        CHECK(print_term(parse_term(s, sig), sig) == s);
    }
}

TEST_CASE("canonicalization respects symmetry flags") {
    const Signature& sig = poisder_signature(); // mul symmetric, lie antisymmetric
    auto [k1, s1] = canonicalize(parse_term("(mul x2 x1)", sig), sig);
    CHECK(print_term(k1, sig) == "(mul x1 x2)");
    CHECK(s1 == 1);
    auto [k2, s2] = canonicalize(parse_term("(lie x2 x1)", sig), sig);
    CHECK(print_term(k2, sig) == "(lie x1 x2)");
    CHECK(s2 == -1);
    auto [k3, s3] = canonicalize(parse_term("(lie x1 x1)", sig), sig);
    (void)k3;
    CHECK(s3 == 0);
    // The paper's degree-3 basis elements are canonical as written.
    auto [k4, s4] = canonicalize(parse_term("(lie (circ x1 x2) x3)", gd_sig()), gd_sig());
    CHECK(print_term(k4, gd_sig()) == "(lie (circ x1 x2) x3)");
    CHECK(s4 == 1);
}

TEST_CASE("multilinear monomial counts") {
    Signature one_op({{"mul", Symmetry::None}}, false);
    CHECK(multilinear_monomials(one_op, 2).size() == 2);
    CHECK(multilinear_monomials(one_op, 3).size() == 12);
    Signature two_ops({{"mul", Symmetry::None}, {"op2", Symmetry::None}}, false);
    CHECK(multilinear_monomials(two_ops, 3).size() == 48);
    CHECK(multilinear_monomials(gd_sig(), 3).size() == 27);
    CHECK_THROWS(multilinear_monomials(one_op, 0));
}

TEST_CASE("multilinear monomials are duplicate-free and S_n-closed up to sign") {
    const Signature& sig = gd_sig();
    for (int n = 2; n <= 4; ++n) {
        auto monos = multilinear_monomials(sig, n);
        std::set<Term, TermLess> keys(monos.begin(), monos.end());
        CHECK(keys.size() == monos.size());
        for (const auto& s : symmetric_group(n))
            for (const auto& t : monos) {
                Polynomial moved = act_permutation(term_poly(t, sig), s, sig);
                REQUIRE(moved.size() == 1);
                CHECK(keys.count(moved.terms().begin()->first) == 1);
            }
    }
}

TEST_CASE("substitution") {
    const Signature& sig = gd_sig();
    Term t = parse_term("(lie x1 x2)", sig);
    std::map<int, Term> a;
    a.emplace(1, parse_term("(circ x1 x2)", sig));
    a.emplace(2, parse_term("x3", sig));
    CHECK(print_term(substitute(t, a), sig) == "(lie (circ x1 x2) x3)");
    std::map<int, Term> missing;
    missing.emplace(1, Term::var(9));
    CHECK_THROWS(substitute(t, missing));
}

TEST_CASE("permutation action composes contravariantly: act(act(f,s),t) = act(f, t*s)") {
    std::mt19937 rng(11);
    const Signature& sig = gd_sig();
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4); // 2..5
        auto monos = multilinear_monomials(sig, std::min(n, 3));
        n = std::min(n, 3);
        Polynomial p;
        for (int j = 0; j < 3; ++j)
            p += term_poly(monos[rng() % monos.size()], sig, rat(static_cast<long>(rng() % 7) - 3));
        auto perms = symmetric_group(n);
        const Permutation& s = perms[rng() % perms.size()];
        const Permutation& t = perms[rng() % perms.size()];
        CHECK(act_permutation(act_permutation(p, s, sig), t, sig) ==
              act_permutation(p, t * s, sig));
    }
}

TEST_CASE("permutation action: spec examples") {
    const Signature& sig = gd_sig();
    // identity fixes everything
    Polynomial p = parse_polynomial("1 (lie x1 x2)", sig);
    CHECK(act_permutation(p, Permutation::identity(2), sig) == p);
    // (12) on an antisymmetric bracket negates
    Polynomial q = act_permutation(p, Permutation::transposition(2, 1, 2), sig);
    Polynomial minus_p = p;
    minus_p *= Rational(-1);
    CHECK(q == minus_p);
    // (13) a_1 = a_10
    auto abasis = gd_a_basis(sig);
    CHECK(act_permutation(abasis[0], Permutation::transposition(3, 1, 3), sig) == abasis[9]);
}

TEST_CASE("polynomial arithmetic is exact: (p + q) - q = p") {
    std::mt19937 rng(13);
    const Signature& sig = gd_sig();
    auto monos = multilinear_monomials(sig, 3);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial p, q;
        for (int j = 0; j < 4; ++j) {
            p += term_poly(monos[rng() % monos.size()], sig,
                           rat(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4));
            q += term_poly(monos[rng() % monos.size()], sig,
                           rat(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4));
        }
        CHECK((p + q) - q == p);
    }
}

TEST_CASE("polynomial text round-trip") {
    const Signature& sig = gd_sig();
    Polynomial p = parse_polynomial("1 (circ x1 x2) + -3/2 (lie x1 x2)", sig);
    CHECK(parse_polynomial(print_polynomial(p, sig), sig) == p);
}
