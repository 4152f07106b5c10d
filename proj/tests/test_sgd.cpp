#include "gdop/expansion.hpp"
#include "gdop/sgd.hpp"

#include <doctest.h>

#include <set>

using namespace gdop;

TEST_CASE("harmonic values") {
    CHECK(harmonic_H(5, 1) == 1);
    CHECK(harmonic_H(3, 2) == rat(3, 2));
    CHECK(harmonic_H(4, 4) == rat(1, 6));
    CHECK(harmonic_H(4, 2) == rat(11, 6)); // 1 + 1/2 + 1/3
    CHECK_THROWS(harmonic_H(3, 4));
    CHECK_THROWS(harmonic_H(0, 1));
}

TEST_CASE("L(n,k) values and integrality") {
    CHECK(lyndon_count_L(3, 1) == 2);
    CHECK(lyndon_count_L(3, 2) == 3);
    CHECK(lyndon_count_L(2, 2) == 1);
    CHECK(lyndon_count_L(6, 1) == 120);
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) CHECK(ls_factorization_count(n, k) == lyndon_count_L(n, k));
}

TEST_CASE("dim SGD(n): table and integrality up to n = 30") {
    long expected[] = {1, 3, 17, 130, 1219, 13391, 167656};
    for (int n = 1; n <= 7; ++n) CHECK(sgd_dim(n) == expected[n - 1]);
    for (int n = 1; n <= 30; ++n) CHECK(sgd_dim(n) > 0); // throws when non-integral
}

TEST_CASE("weight -1 monomial enumeration matches the formula") {
    for (int n = 1; n <= 5; ++n) {
        auto monomials = enumerate_sgd_monomials(n);
        std::set<PoisMonomial> uniq(monomials.begin(), monomials.end());
        CHECK(uniq.size() == monomials.size());
        CHECK(Integer(static_cast<long>(monomials.size())) == sgd_dim(n));
        for (const auto& m : monomials) CHECK(pois_weight(m) == -1);
    }
    CHECK_THROWS(enumerate_sgd_monomials(8));
}

TEST_CASE("sgd monomials at n = 2 are the expected three") {
    auto ms = enumerate_sgd_monomials(2);
    std::set<std::string> printed;
    for (const auto& m : ms) printed.insert(print_pois_monomial(m));
    CHECK(printed == std::set<std::string>{"(pm (lie x2 x1))", "(pm x1 (d x2))", "(pm x2 (d x1))"});
}

TEST_CASE("GD-dual weight enumerations") {
    // degree n count for both models is binom(2n-1, n-1)
    long expected[] = {1, 3, 10, 35, 126};
    for (int n = 1; n <= 5; ++n) {
        CHECK(static_cast<long>(enumerate_gd_dual_monomials(n).size()) == expected[n - 1]);
        CHECK(static_cast<long>(enumerate_gd_dual_bicom_monomials(n).size()) == expected[n - 1]);
    }
    // n = 2: the three basis elements are the images of *, star, star-opposite
    auto b2 = enumerate_gd_dual_bicom_monomials(2);
    std::set<std::string> printed;
    for (const auto& m : b2) printed.insert(print_bicom_monomial(m));
    CHECK(printed == std::set<std::string>{"(bm (ast x1) (odot x2))", "(bm (ast) (odot x1 (d x2)))",
                                           "(bm (ast) (odot x2 (d x1)))"});
}

TEST_CASE("pre-image: spec examples") {
    const Signature& gsig = gd_term_signature();
    // {x1, x2} -> bracket
    PoisMonomial m1 = parse_pois_monomial("(pm (lie x2 x1))");
    Polynomial f1 = gd_preimage(m1);
    CHECK(print_polynomial(f1, gsig) == "-1 (lie x1 x2)");

    // x1 d(x2) -> x1 o x2
    PoisMonomial m2 = parse_pois_monomial("(pm x1 (d x2))");
    CHECK(print_polynomial(gd_preimage(m2), gsig) == "1 (circ x1 x2)");

    // x1 {d(x2), x3} -> [x1 o x2, x3] - [x1, x3] o x2
    PoisMonomial m3 = parse_pois_monomial("(pm x1 (lie (d x2) x3))");
    Polynomial f3 = gd_preimage(m3);
    Polynomial expected =
        parse_polynomial("1 (lie (circ x1 x2) x3) + -1 (circ (lie x1 x3) x2)", gsig);
    CHECK(f3 == expected);
}

TEST_CASE("pre-image round trip, n <= 3") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& a : enumerate_sgd_monomials(n)) {
            Polynomial f = gd_preimage(a);
            CHECK(expand_gd(f, gd_term_signature()) == PoisPoly::monomial(a));
        }
}

TEST_CASE("pre-image rejects bad inputs") {
    CHECK_THROWS(gd_preimage(parse_pois_monomial("(pm x1 x2)")));     // weight -2
    CHECK_THROWS(gd_preimage(parse_pois_monomial("(pm (d x1))")));    // weight 0
    CHECK_THROWS(gd_preimage(parse_pois_monomial("(pm x1 (d x1))"))); // repeated variable
    // d(x1) x2 is weight -1 with pre-image x2 o x1
    Polynomial f = gd_preimage(parse_pois_monomial("(pm x2 (d x1))"));
    CHECK(print_polynomial(f, gd_term_signature()) == "1 (circ x2 x1)");
}
