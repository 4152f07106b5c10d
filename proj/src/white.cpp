#include "gdop/white.hpp"

#include <functional>
#include <utility>

namespace gdop {

namespace {

using PairKey = std::pair<Term, Term>;
struct PairLess {
    bool operator()(const PairKey& a, const PairKey& b) const {
        if (int c = compare(a.first, b.first)) return c < 0;
        return compare(a.second, b.second) < 0;
    }
};
using PairPoly = LinComb<PairKey, PairLess>;

PairPoly tensor(const Polynomial& p, const Polynomial& q) {
    PairPoly out;
    for (const auto& [tp, cp] : p.terms())
        for (const auto& [tq, cq] : q.terms()) out.add({tp, tq}, cp * cq);
    return out;
}

} // namespace

WhiteProduct white_product_degree3(const OperadPresentation& P, const OperadPresentation& Q,
                                   const std::vector<WhiteGenerator>& gens) {
    // Generator signature and symmetry validation against the tensor action.
    std::vector<OpDef> ops;
    for (const auto& g : gens) ops.push_back({g.name, g.sym});
    Signature gsig(ops, false);
    Permutation swap12 = Permutation::transposition(2, 1, 2);
    for (const auto& g : gens) {
        PairPoly pq = tensor(g.p_part, g.q_part);
        PairPoly swapped =
            tensor(act_permutation(g.p_part, swap12, P.sig), act_permutation(g.q_part, swap12, Q.sig));
        if (g.sym == Symmetry::Symmetric && !(swapped == pq))
            throw std::invalid_argument("generator " + g.name + " is not symmetric");
        if (g.sym == Symmetry::Antisymmetric) {
            PairPoly neg = pq;
            neg *= Rational(-1);
            if (!(swapped == neg))
                throw std::invalid_argument("generator " + g.name + " is not antisymmetric");
        }
    }

    // Quotient models for the two factors.
    MultilinearComponent CP = component_basis(P, 3);
    MultilinearComponent CQ = component_basis(Q, 3);

    // Componentwise evaluation of a generator-signature term.
    std::function<PairPoly(const Term&)> eval = [&](const Term& t) -> PairPoly {
        switch (t.kind()) {
            case Term::Kind::Var: {
                Term v = Term::var(t.var_index());
                return PairPoly::monomial({v, v});
            }
            case Term::Kind::Der:
                throw std::invalid_argument("white product terms cannot contain d");
            case Term::Kind::App: {
                const WhiteGenerator& g = gens[static_cast<std::size_t>(t.op())];
                PairPoly l = eval(t.left()), r = eval(t.right());
                PairPoly out;
                for (const auto& [kl, cl] : l.terms())
                    for (const auto& [kr, cr] : r.terms()) {
                        std::map<int, Polynomial> ap, aq;
                        ap[1] = term_poly(kl.first, P.sig);
                        ap[2] = term_poly(kr.first, P.sig);
                        aq[1] = term_poly(kl.second, Q.sig);
                        aq[2] = term_poly(kr.second, Q.sig);
                        PairPoly piece = tensor(substitute_poly(g.p_part, ap, P.sig),
                                                substitute_poly(g.q_part, aq, Q.sig));
                        piece *= cl * cr;
                        out += piece;
                    }
                return out;
            }
        }
        throw std::logic_error("unreachable");
    };

    // Project M3(P) (x) M3(Q) onto P(3) (x) Q(3): reduce each side mod its
    // consequence space, coordinates on the full M3 x M3 grid.
    std::size_t np = CP.monomials.size(), nq = CQ.monomials.size();
    auto project = [&](const PairPoly& pp) {
        Vec grid(np * nq, Rational(0));
        for (const auto& [key, c] : pp.terms()) {
            Vec vp = CP.consequences.reduce(CP.monomials.to_vec(term_poly(key.first, P.sig))).residual;
            Vec vq = CQ.consequences.reduce(CQ.monomials.to_vec(term_poly(key.second, Q.sig))).residual;
            for (std::size_t i = 0; i < np; ++i) {
                if (vp[i] == 0) continue;
                for (std::size_t j = 0; j < nq; ++j)
                    if (vq[j] != 0) grid[i * nq + j] += c * vp[i] * vq[j];
            }
        }
        return grid;
    };

    WhiteProduct out;
    out.gen_sig = gsig;
    ComponentIndex domain = component_index(gsig, 3);
    out.domain_dim = domain.size();

    RowSpace image(np * nq, true);
    std::vector<std::size_t> kernel_marks;
    std::vector<std::map<std::size_t, Rational>> kernel_combos;
    for (std::size_t t = 0; t < domain.size(); ++t) {
        Vec img = project(eval(domain.basis[t]));
        auto red = image.reduce(img);
        if (red.in_span) {
            kernel_marks.push_back(t);
            kernel_combos.push_back(red.combination);
        }
        image.insert(img);
    }
    out.image_dim = image.dim();

    // Each dependent monomial yields one kernel polynomial
    // m_t - sum c_s m_s. Inserted ids coincide with domain indices here
    // because every domain monomial is inserted exactly once.
    for (std::size_t k = 0; k < kernel_marks.size(); ++k) {
        Polynomial rel = term_poly(domain.basis[kernel_marks[k]], gsig);
        for (const auto& [id, c] : kernel_combos[k]) {
            Polynomial q = term_poly(domain.basis[id], gsig);
            q *= -c;
            rel += q;
        }
        out.relations.push_back(std::move(rel));
    }
    return out;
}

} // namespace gdop
