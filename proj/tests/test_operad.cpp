#include "gdop/builtins.hpp"
#include "gdop/koszul.hpp"
#include "gdop/sgd.hpp"

#include <doctest.h>

using namespace gdop;

TEST_CASE("component dimensions at degree 2 and 3") {
    CHECK(component_basis(builtin_presentation("gd"), 2).quotient_dim == 3);
    CHECK(component_basis(builtin_presentation("com"), 3).quotient_dim == 1);
    CHECK(component_basis(builtin_presentation("as"), 3).quotient_dim == 6);
    CHECK(component_basis(builtin_presentation("lie"), 3).quotient_dim == 2);
    CHECK(component_basis(builtin_presentation("pois"), 3).quotient_dim == 6);
    CHECK(component_basis(builtin_presentation("nov"), 3).quotient_dim == 6);
    // Novikov dimensions match the weight -1 commutative-differential model
    // at the next degree as well.
    CHECK(component_basis(builtin_presentation("nov"), 4).quotient_dim == 20);
}

TEST_CASE("GD(3) = 17 = 27 - rank of the relation rows") {
    OperadPresentation gd = builtin_presentation("gd");
    MultilinearComponent comp = component_basis(gd, 3);
    CHECK(comp.monomials.size() == 27);
    CHECK(comp.consequences.dim() == 10);
    CHECK(comp.quotient_dim == 17);

    // The generic consequence space coincides with the span of the paper's
    // ten relation vectors.
    auto abasis = gd_a_basis(gd.sig);
    auto rows = gd_relation_vectors(gd.sig);
    RowSpace paper_rows(27);
    for (const auto& row : rows) {
        Polynomial p;
        for (int j = 0; j < 27; ++j)
            if (row[static_cast<std::size_t>(j)] != 0) {
                Polynomial q = abasis[static_cast<std::size_t>(j)];
                q *= Rational(row[static_cast<std::size_t>(j)]);
                p += q;
            }
        paper_rows.insert(comp.monomials.to_vec(p));
    }
    CHECK(span_equal(paper_rows, comp.consequences));
}

TEST_CASE("GD!(3) via the presentation equals the weight model count") {
    CHECK(component_basis(builtin_presentation("gd-dual"), 3).quotient_dim == 10);
    CHECK(component_basis(builtin_presentation("gd-dual"), 2).quotient_dim == 3);
}

TEST_CASE("degree-4 component dimensions cross-check the free-algebra models") {
    // GD-dual(4) equals the number of weight <= -1 commutative-differential
    // monomials on 4 letters, binom(7,3); Pois(4) equals 4!; Com/As/Lie are
    // the classical values.
    CHECK(component_basis(builtin_presentation("gd-dual"), 4).quotient_dim == 35);
    CHECK(static_cast<long>(enumerate_gd_dual_monomials(4).size()) == 35);
    CHECK(component_basis(builtin_presentation("pois"), 4).quotient_dim == 24);
    CHECK(component_basis(builtin_presentation("com"), 4).quotient_dim == 1);
    CHECK(component_basis(builtin_presentation("as"), 4).quotient_dim == 24);
    CHECK(component_basis(builtin_presentation("lie"), 4).quotient_dim == 6);
    CHECK(component_basis(builtin_presentation("bicom"), 4).quotient_dim == 4);
}

TEST_CASE("right Novikov and BiCom component dimensions") {
    CHECK(component_basis(builtin_presentation("rnov"), 3).quotient_dim == 6);
    CHECK(component_basis(builtin_presentation("bicom"), 3).quotient_dim == 3);
    CHECK(component_basis(builtin_presentation("bicom"), 2).quotient_dim == 2);
}

TEST_CASE("errors: unsupported degree, degree mismatch") {
    OperadPresentation gd = builtin_presentation("gd");
    CHECK_THROWS(component_basis(gd, 5));
    CHECK_THROWS(component_basis(gd, 1));
    Polynomial gd1 = parse_identity_with(builtin_identity("gd1"), gd.sig);
    CHECK_THROWS(tideal_membership(gd1, gd, {}, 4)); // degree-3 candidate at degree 4
    CHECK_THROWS(act_permutation(gd1, Permutation::identity(4), gd.sig));
}

TEST_CASE("dim Pois(3) cross-checks against the LS-factorization count") {
    Integer total = 0;
    for (int k = 1; k <= 3; ++k) total += lyndon_count_L(3, k);
    CHECK(total == 6);
    CHECK(component_basis(builtin_presentation("pois"), 3).quotient_dim == 6);
}

TEST_CASE("membership: gd1 is a generator, s-ident is not a consequence") {
    OperadPresentation gd = builtin_presentation("gd");
    Polynomial gd1 = parse_identity_with(builtin_identity("gd1"), gd.sig);
    MembershipResult m = tideal_membership(gd1, gd, {}, 3);
    CHECK(m.member);
    CHECK(m.certificate_ok);

    Polynomial s_ident = parse_identity_with(builtin_identity("s-ident"), gd.sig);
    MembershipResult m2 = tideal_membership(s_ident, gd, {}, 4);
    CHECK_FALSE(m2.member);
    CHECK(m2.certificate_ok);
    CHECK(m2.functional_dot_candidate != 0);
}

TEST_CASE("s2-nilp transforms to translates of s2-nilp2 modulo the nilpotent system") {
    OperadPresentation nilp = builtin_presentation("gd-3nilp");
    MultilinearComponent comp = component_basis(nilp, 4);

    Polynomial s2 = parse_identity_with(builtin_identity("s2-nilp"), nilp.sig);
    Polynomial s22 = parse_identity_with(builtin_identity("s2-nilp2"), nilp.sig);

    // s2-nilp itself is not a consequence...
    CHECK_FALSE(comp.consequences.contains(comp.monomials.to_vec(s2)));
    // ... but it lies in consequences + span(S4-translates of s2-nilp2).
    RowSpace extended(comp.monomials.size());
    for (const auto& row : comp.consequences.rows()) extended.insert(row);
    for (const auto& s : symmetric_group(4))
        extended.insert(comp.monomials.to_vec(act_permutation(s22, s, nilp.sig)));
    CHECK(extended.contains(comp.monomials.to_vec(s2)));

    // The specific transformation: s2-nilp = x3 o [x1 o x2, x4]
    //                                       + x3 o [x1 o x4, x2]  (mod consequences).
    Permutation sigma1({3, 1, 2, 4}); // x1->x3, x2->x1, x3->x2, x4->x4
    Permutation sigma2({3, 1, 4, 2});
    Polynomial combo = act_permutation(s22, sigma1, nilp.sig);
    combo += act_permutation(s22, sigma2, nilp.sig);
    Polynomial diff = s2 - combo;
    CHECK(comp.consequences.contains(comp.monomials.to_vec(diff)));
}

TEST_CASE("degree-2 relations fold into symmetry flags when loading JSON") {
    std::string json = R"json({
      "name": "toy",
      "ops": [{"name": "lie", "symmetry": "antisymmetric"}],
      "relations": ["1 (lie x1 x2) + 1 (lie x2 x1)",
                    "1 (lie (lie x1 x2) x3) + 1 (lie (lie x2 x3) x1) + 1 (lie (lie x3 x1) x2)"]
    })json";
    OperadPresentation p = load_presentation_json(json);
    CHECK(p.relations.size() == 1);
    CHECK(component_basis(p, 3).quotient_dim == 2);
}
