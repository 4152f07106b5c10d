/*
 * bicom.hpp
 * ---------
 * The free differential BiCom algebra: two commutative associative products
 * * and (.) linked by (x (.) y) * z = x (.) (y * z). A normal monomial is
 *     l_1 * ... * l_t * (l_{t+1} (.) ... (.) l_n)
 * over letters l_i in d^w X, sorted ascending overall; the link identity and
 * its corollaries let any *-letter trade places with any (.)-letter, so only
 * the sorted letter multiset and the split position t matter. The products
 * on normal monomials resort the pooled letters and move the split:
 *     u * v : t = t_u + t_v + 1,    u (.) v : t = t_u + t_v,
 * which is the free-algebra structure on these words. Weight is
 * wt(x) = -1, wt(d u) = wt(u)+1, wt(u*v) = wt(u)+wt(v)+1,
 * wt(u (.) v) = wt(u)+wt(v); on a normal monomial that is D - k with k the
 * (.)-part size.
 */
#pragma once

#include "gdop/comder.hpp"
#include "gdop/lincomb.hpp"
#include "gdop/lyndon.hpp"
#include "gdop/polynomial.hpp"

#include <string>
#include <vector>

namespace gdop {

struct BiComMonomial {
    std::vector<DWord> letters; // sorted ascending
    int star_count = 0;         // first star_count letters form the *-part

    auto operator<=>(const BiComMonomial&) const = default;
};

using BiComPoly = LinComb<BiComMonomial>;

BiComMonomial bicom_monomial(std::vector<DWord> letters, int star_count);
BiComPoly bicom_var(int index);
BiComPoly bicom_star(const BiComPoly& a, const BiComPoly& b);
BiComPoly bicom_odot(const BiComPoly& a, const BiComPoly& b);
BiComPoly bicom_d(const BiComPoly& a);

int bicom_weight(const BiComMonomial& m);

// Evaluate a term over {ast, odot} (+ d) into normal form.
BiComPoly bicom_eval(const Term& t, int ast_op, int odot_op);

// Forget the * / (.) distinction: the collapse onto ComDer used to see that
// the weight -1 basis maps to linearly independent commutative monomials.
ComMonomial bicom_collapse(const BiComMonomial& m);

std::string print_bicom_monomial(const BiComMonomial& m);
std::string print_bicom_poly(const BiComPoly& p);

} // namespace gdop
