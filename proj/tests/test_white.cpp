#include "gdop/builtins.hpp"
#include "gdop/expansion.hpp"
#include "gdop/white.hpp"

#include <doctest.h>

using namespace gdop;

namespace {

RowSpace closure3_of(const std::vector<Polynomial>& rels, const Signature& sig,
                     const ComponentIndex& idx) {
    RowSpace space(idx.size());
    for (const auto& r : rels)
        for (const auto& s : symmetric_group(3))
            space.insert(idx.to_vec(act_permutation(r, s, sig)));
    return space;
}

} // namespace

TEST_CASE("Lie o Nov has no degree-3 relations") {
    WhiteCase w = builtin_white("lie-nov");
    WhiteProduct wp = white_product_degree3(w.P, w.Q, w.gens);
    CHECK(wp.domain_dim == 12);
    CHECK(wp.image_dim == 12);
    CHECK(wp.relations.empty());
}

TEST_CASE("As o Nov is presented by l-alg and lod-der") {
    WhiteCase w = builtin_white("as-nov");
    WhiteProduct wp = white_product_degree3(w.P, w.Q, w.gens);
    CHECK(wp.domain_dim == 48);
    ComponentIndex idx = component_index(wp.gen_sig, 3);
    RowSpace got(idx.size());
    for (const auto& r : wp.relations) got.insert(idx.to_vec(r));
    std::vector<Polynomial> expect = {parse_identity_with(builtin_identity("l-alg"), wp.gen_sig),
                                      parse_identity_with(builtin_identity("lod-der"), wp.gen_sig)};
    CHECK(span_equal(got, closure3_of(expect, wp.gen_sig, idx)));
}

TEST_CASE("every As o Nov relation is a derived identity of As") {
    WhiteCase w = builtin_white("as-nov");
    WhiteProduct wp = white_product_degree3(w.P, w.Q, w.gens);
    for (const auto& r : wp.relations) {
        // reinterpret over the derived source signature (same op names)
        Polynomial p = parse_polynomial(print_polynomial(r, wp.gen_sig),
                                        derived_source_signature());
        CHECK(verify_identity(p, derived_source_signature(), "derived",
                              DerivedTarget::Associative)
                  .holds);
    }
}

TEST_CASE("Pois o GD-dual relations span the published axiom list") {
    WhiteCase w = builtin_white("pois-gddual");
    WhiteProduct wp = white_product_degree3(w.P, w.Q, w.gens);
    CHECK(wp.domain_dim == 108);
    CHECK(wp.image_dim == 60); // Pois(3) (x) GD-dual(3) is filled completely
    ComponentIndex idx = component_index(wp.gen_sig, 3);
    RowSpace got(idx.size());
    for (const auto& r : wp.relations) got.insert(idx.to_vec(r));

    std::vector<Polynomial> expect = {
        parse_polynomial("1 (ast (ast x1 x2) x3) + -1 (ast x1 (ast x2 x3))", wp.gen_sig),
        parse_polynomial("1 (lie (lie x1 x2) x3) + 1 (lie (lie x2 x3) x1) + 1 (lie (lie x3 x1) x2)",
                         wp.gen_sig),
        parse_polynomial("1 (lie x1 (ast x2 x3)) + -1 (ast (lie x1 x2) x3) + -1 (ast x2 (lie x1 x3))",
                         wp.gen_sig),
        parse_polynomial("1 (circ (circ x1 x2) x3) + -1 (circ x1 (circ x2 x3)) + -1 (circ (circ "
                         "x2 x1) x3) + 1 (circ x2 (circ x1 x3))",
                         wp.gen_sig),
        parse_polynomial("1 (circ (circ x1 x2) x3) + -1 (circ (circ x1 x3) x2)", wp.gen_sig),
    };
    for (const char* name : {"pgd1", "pgd2", "pgd21", "pgd22", "pgd3", "pgd4", "pgd5", "pgd6",
                             "pgd7", "pgd8"})
        expect.push_back(parse_identity_with(builtin_identity(name), wp.gen_sig));
    CHECK(span_equal(got, closure3_of(expect, wp.gen_sig, idx)));
}

TEST_CASE("every Pois o GD-dual relation expands to zero in PoisDer") {
    WhiteCase w = builtin_white("pois-gddual");
    WhiteProduct wp = white_product_degree3(w.P, w.Q, w.gens);
    for (const auto& r : wp.relations) {
        Polynomial p = parse_polynomial(print_polynomial(r, wp.gen_sig),
                                        gen_derived_source_signature());
        CHECK(verify_identity(p, gen_derived_source_signature(), "gen-derived").holds);
    }
}

TEST_CASE("generator symmetry declarations are validated") {
    WhiteCase w = builtin_white("pois-gddual");
    w.gens[0].sym = Symmetry::Antisymmetric; // ast is symmetric, not anti
    CHECK_THROWS(white_product_degree3(w.P, w.Q, w.gens));
}
