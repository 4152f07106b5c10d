/*
 * comder.hpp
 * ----------
 * The free differential commutative algebra ComDer<X,d> = Com<d^w X>. A
 * normal monomial is a sorted multiset of letters d^s(x). Weight here is
 * wt(x) = -1, wt(uv) = wt(u)+wt(v), wt(du) = wt(u)+1: a monomial's weight is
 * its d-count minus its letter count.
 */
#pragma once

#include "gdop/lincomb.hpp"
#include "gdop/lyndon.hpp"
#include "gdop/polynomial.hpp"

#include <string>
#include <vector>

namespace gdop {

struct ComMonomial {
    std::vector<DWord> letters; // sorted ascending

    auto operator<=>(const ComMonomial&) const = default;
};

using ComPoly = LinComb<ComMonomial>;

ComMonomial com_monomial(std::vector<DWord> letters); // sorts
ComPoly com_var(int index);
ComPoly com_mul(const ComPoly& a, const ComPoly& b);
ComPoly com_d(const ComPoly& a);

int com_weight(const ComMonomial& m);
int com_d_degree(const ComMonomial& m);

// Evaluate a term over {mul} (+ d) into normal form.
ComPoly comder_eval(const Term& t, int mul_op);

ComPoly comder_substitute(const ComPoly& p, int var, const ComPoly& value);

std::string print_com_monomial(const ComMonomial& m);
std::string print_com_poly(const ComPoly& p);

} // namespace gdop
