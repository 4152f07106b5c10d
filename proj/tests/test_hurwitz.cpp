#include "gdop/expansion.hpp"
#include "gdop/hurwitz.hpp"

#include <doctest.h>

using namespace gdop;

TEST_CASE("Phi preserves prec, mul, and a composite") {
    const Signature& src = derived_source_signature();
    CHECK(hurwitz_phi_check(parse_term("(prec x1 x2)", src), src, 4).holds);
    CHECK(hurwitz_phi_check(parse_term("(mul x1 x2)", src), src, 4).holds);
    CHECK(hurwitz_phi_check(parse_term("(succ x1 (mul x2 x3))", src), src, 4).holds);
}

TEST_CASE("Phi check is exhaustive over degree <= 3 at N = 4") {
    const Signature& src = derived_source_signature();
    for (int n = 2; n <= 3; ++n)
        for (const auto& t : multilinear_monomials(src, n))
            CHECK(hurwitz_phi_check(t, src, 4).holds);
}

TEST_CASE("truncation too small is detected") {
    const Signature& src = derived_source_signature();
    Term t = parse_term("(succ (succ x1 x2) x3)", src); // two derivations
    CHECK_THROWS(hurwitz_phi_check(t, src, 2));
    CHECK(hurwitz_phi_check(t, src, 3).holds);
}
