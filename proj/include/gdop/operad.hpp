/*
 * operad.hpp
 * ----------
 * Multilinear components of presented varieties. A presentation is a
 * signature plus multilinear relation polynomials of degree 3 (degree-2
 * relations are only symmetry identifications and are folded into the
 * signature when a presentation is loaded). The degree-n slice of the
 * T-ideal is generated, for n = 3, by the S3-translates of the relations
 * and, for n = 4, by the relation-into-generator and generator-into-relation
 * compositions closed under S4. Membership of a multilinear candidate is a
 * rank question over Q; both answers ship certificates.
 */
#pragma once

#include "gdop/linalg.hpp"
#include "gdop/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gdop {

struct OperadPresentation {
    std::string name;
    Signature sig;
    std::vector<std::string> relation_names;
    std::vector<Polynomial> relations; // multilinear, degree 3

    void validate() const; // checks multilinearity and degrees
};

struct ComponentIndex {
    std::vector<Term> basis; // canonical keys, ascending
    Vec to_vec(const Polynomial& p) const;
    Polynomial to_poly(const Vec& v) const;
    std::size_t index_of(const Term& t) const; // throws if absent
    std::size_t size() const { return basis.size(); }
};

ComponentIndex component_index(const Signature& sig, int n);

struct GeneratedRow {
    std::string descriptor;
    Polynomial poly;
};

// All degree-n T-ideal generators (before row reduction): relation
// compositions and S_n-translates, plus S_n-translates of the degree-n
// extras.
std::vector<GeneratedRow> consequence_generators(const OperadPresentation& pres, int n,
                                                 const std::vector<Polynomial>& extra = {},
                                                 const std::vector<std::string>& extra_names = {});

struct MultilinearComponent {
    int degree = 0;
    ComponentIndex monomials;
    RowSpace consequences;              // row space over the monomial basis
    std::vector<GeneratedRow> generators;
    std::size_t quotient_dim = 0;
};

// n in {2, 3, 4}.
MultilinearComponent component_basis(const OperadPresentation& pres, int n,
                                     const std::vector<Polynomial>& extra = {},
                                     const std::vector<std::string>& extra_names = {},
                                     bool track_combinations = false);

struct MembershipResult {
    bool member = false;
    // member: candidate = sum coeff * generator (descriptors refer to the
    // generated consequence rows)
    std::vector<std::pair<std::string, Rational>> combination;
    // non-member: separating functional over the monomial basis
    Vec functional;
    Rational functional_dot_candidate;
    bool certificate_ok = false; // re-checked by dot products / re-expansion
    Vec residual;                // canonical residual mod the consequence space
};

MembershipResult tideal_membership(const Polynomial& candidate, const OperadPresentation& pres,
                                   const std::vector<Polynomial>& extra, int n);

// Reduce a candidate to its canonical residual modulo the consequence space.
Polynomial reduce_mod_consequences(const Polynomial& candidate, const MultilinearComponent& comp);

} // namespace gdop
