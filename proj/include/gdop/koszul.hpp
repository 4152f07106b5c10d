/*
 * koszul.hpp
 * ----------
 * Degree-3 quadratic duality for binary operads.
 *
 * For a signature with degree-2 monomial basis e_1..e_m, the degree-3 space
 * O3 = kS3 (x)_{kS2} (E (x) E) is coordinatized by triples (s, i, j) with
 * s in {id, (13), (23)}: the monomial s . e_i(e_j(x1, x2), x3). The dual
 * generator space E' carries the sign-twisted dual S2-action (matrix -A^T
 * when E acts by A), and the duality pairing is
 *     < (s,i,j)' , (t,k,l) > = delta_{s,t} sgn(s) delta_{i,k} delta_{j,l}.
 * The dual relation space is the orthogonal complement U^perp of the
 * S3-closure U of the relation vectors. The sign convention is pinned by the
 * Lie<->Com and As<->As self-tests.
 *
 * The GD-specific a-basis a_1..a_27 (a_{9+i} = (13)a_i, a_{18+i} = (23)a_i)
 * and the 10 defining relation vectors (Jacobi, three right-commutativity
 * translates, three left-symmetry translates, three compatibility
 * translates) live here too.
 */
#pragma once

#include "gdop/linalg.hpp"
#include "gdop/operad.hpp"
#include "gdop/polynomial.hpp"

#include <array>
#include <vector>

namespace gdop {

// ---- O3 coordinates for an arbitrary binary signature ----

struct O3Space {
    Signature sig;
    std::vector<Term> e_basis;         // degree-2 canonical monomials e_1..e_m
    std::vector<Polynomial> basis;     // 3m^2 signed monomials, index (s,i,j)
    ComponentIndex m3;                 // canonical degree-3 monomials
    std::vector<std::size_t> key_index; // m3 key -> O3 index
    std::vector<int> key_sign;          // m3 key -> sign in the O3 basis element

    std::size_t dim() const { return basis.size(); }
    std::size_t index(std::size_t s, std::size_t i, std::size_t j) const {
        return (s * e_basis.size() + i) * e_basis.size() + j;
    }

    Vec coords(const Polynomial& p) const;   // coordinates in the O3 basis
    Polynomial from_coords(const Vec& v) const;
};

O3Space o3_space(const Signature& sig);

// S2-action matrix on the degree-2 basis: act(e_i, (12)) = sum_j A[i][j] e_j.
std::vector<Vec> degree2_action(const Signature& sig, const std::vector<Term>& e_basis);

// ---- the GD a-basis and relation matrix ----

// a_1..a_27 as signed monomials over the GD presentation signature
// {circ none... see builtin "gd": circ, lie antisymmetric}.
std::vector<Polynomial> gd_a_basis(const Signature& gd_sig);

// The ten relation vectors in a-basis coordinates, in the paper-fixed order:
// Jacobi; right commutativity at x1, x2, x3; left symmetry at (x1,x2),
// (x1,x3), (x3,x2); compatibility at (x2,x1,x3), (x1,x2,x3), (x2,x3,x1).
std::vector<std::array<int, 27>> gd_relation_vectors(const Signature& gd_sig);

// ---- generic degree-3 Koszul dual ----

struct DualDictionary {
    Signature dual_sig;
    // dict[i] = the dual generator e'_i written on dual_sig ops in x1, x2.
    std::vector<Polynomial> dict;
};

struct KoszulDual {
    std::size_t dim_U = 0;       // S3-closure of the relations
    std::size_t dim_U_perp = 0;
    std::vector<Polynomial> dual_relations; // over dict.dual_sig
};

// Requires a quadratic presentation. The dictionary must intertwine the
// sign-twisted S2-action (checked; wrong sign conventions are rejected).
KoszulDual koszul_dual_degree3(const OperadPresentation& pres, const DualDictionary& dict);

} // namespace gdop
