/*
 * white.hpp
 * ---------
 * Degree-3 part of a Manin white product P o Q, presented on a chosen
 * generator subspace of P(2) (x) Q(2). Generators are named operations with
 * a dictionary entry (p-part, q-part); a degree-3 monomial on the generator
 * signature is evaluated componentwise into M3(P-sig) (x) M3(Q-sig) and then
 * projected to P(3) (x) Q(3) by reducing each side modulo its consequence
 * space. The degree-3 relations of the white product are exactly the kernel
 * of that evaluation, pulled back as identities on the generator symbols.
 */
#pragma once

#include "gdop/operad.hpp"

#include <string>
#include <vector>

namespace gdop {

struct WhiteGenerator {
    std::string name;
    Symmetry sym;
    Polynomial p_part; // over P.sig, in x1 x2
    Polynomial q_part; // over Q.sig, in x1 x2
};

struct WhiteProduct {
    Signature gen_sig;                  // the named generator operations
    std::size_t domain_dim = 0;         // dim M3(gen_sig)
    std::size_t image_dim = 0;          // dim of the image in P(3) (x) Q(3)
    std::vector<Polynomial> relations;  // kernel, over gen_sig
};

WhiteProduct white_product_degree3(const OperadPresentation& P, const OperadPresentation& Q,
                                   const std::vector<WhiteGenerator>& gens);

} // namespace gdop
