#include "gdop/koszul.hpp"

#include <stdexcept>

namespace gdop {

namespace {

const std::array<std::array<int, 3>, 3> kCosetReps = {{
    {1, 2, 3}, // id
    {3, 2, 1}, // (13)
    {1, 3, 2}, // (23)
}};

Permutation coset_rep(std::size_t s) {
    return Permutation({kCosetReps[s][0], kCosetReps[s][1], kCosetReps[s][2]});
}

} // namespace

Vec O3Space::coords(const Polynomial& p) const {
    Vec v(dim(), Rational(0));
    for (const auto& [t, c] : p.terms()) {
        std::size_t k = m3.index_of(t);
        v[key_index[k]] += Rational(key_sign[k]) * c;
    }
    return v;
}

Polynomial O3Space::from_coords(const Vec& v) const {
    Polynomial p;
    for (std::size_t i = 0; i < dim(); ++i)
        if (v[i] != 0) {
            Polynomial q = basis[i];
            q *= v[i];
            p += q;
        }
    return p;
}

O3Space o3_space(const Signature& sig) {
    O3Space o3;
    o3.sig = sig;
    o3.e_basis = multilinear_monomials(sig, 2);
    o3.m3 = component_index(sig, 3);
    std::size_t m = o3.e_basis.size();
    if (o3.m3.size() != 3 * m * m)
        throw std::logic_error("degree-3 component does not decompose as 3 m^2");
    o3.basis.resize(3 * m * m);
    o3.key_index.assign(o3.m3.size(), 0);
    o3.key_sign.assign(o3.m3.size(), 0);
    for (std::size_t s = 0; s < 3; ++s) {
        Permutation rep = coset_rep(s);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                // e_i(e_j(x1,x2), x3), then relabel by the coset rep.
                std::map<int, Polynomial> a;
                a[1] = term_poly(o3.e_basis[j], sig);
                a[2] = term_poly(Term::var(3), sig);
                Polynomial comp = substitute_poly(o3.e_basis[i], a, sig);
                Polynomial elt = act_permutation(comp, rep, sig);
                if (elt.size() != 1)
                    throw std::logic_error("O3 basis element is not a signed monomial");
                std::size_t idx = o3.index(s, i, j);
                o3.basis[idx] = elt;
                const auto& [key, coef] = *elt.terms().begin();
                if (coef != 1 && coef != -1)
                    throw std::logic_error("O3 basis element has a non-unit coefficient");
                std::size_t k = o3.m3.index_of(key);
                if (o3.key_sign[k] != 0) throw std::logic_error("O3 indexing is not a bijection");
                o3.key_index[k] = idx;
                o3.key_sign[k] = (coef == 1) ? 1 : -1;
            }
    }
    return o3;
}

std::vector<Vec> degree2_action(const Signature& sig, const std::vector<Term>& e_basis) {
    ComponentIndex idx{e_basis};
    Permutation swap12 = Permutation::transposition(2, 1, 2);
    std::vector<Vec> rows;
    for (const auto& e : e_basis)
        rows.push_back(idx.to_vec(act_permutation(term_poly(e, sig), swap12, sig)));
    return rows;
}

// ---- GD a-basis ----

std::vector<Polynomial> gd_a_basis(const Signature& gd_sig) {
    int circ = gd_sig.op_index("circ");
    int lie = gd_sig.op_index("lie");
    if (circ < 0 || lie < 0) throw std::invalid_argument("need circ and lie operations");
    auto x1 = Term::var(1), x2 = Term::var(2), x3 = Term::var(3);
    auto C = [&](Term a, Term b) { return Term::app(circ, a, b); };
    auto L = [&](Term a, Term b) { return Term::app(lie, a, b); };

    std::vector<Term> first9 = {
        L(L(x1, x2), x3), L(C(x1, x2), x3), L(C(x2, x1), x3),
        C(L(x1, x2), x3), C(C(x1, x2), x3), C(C(x2, x1), x3),
        C(x3, L(x1, x2)), C(x3, C(x1, x2)), C(x3, C(x2, x1)),
    };
    std::vector<Polynomial> basis;
    for (const auto& t : first9) basis.push_back(term_poly(t, gd_sig));
    Permutation p13 = Permutation::transposition(3, 1, 3);
    Permutation p23 = Permutation::transposition(3, 2, 3);
    for (int i = 0; i < 9; ++i)
        basis.push_back(act_permutation(basis[static_cast<std::size_t>(i)], p13, gd_sig));
    for (int i = 0; i < 9; ++i)
        basis.push_back(act_permutation(basis[static_cast<std::size_t>(i)], p23, gd_sig));
    for (const auto& b : basis)
        if (b.size() != 1) throw std::logic_error("a-basis element is not a signed monomial");
    return basis;
}

namespace {

// Coordinates of p in the signed-monomial basis.
std::array<int, 27> a_coords(const Polynomial& p, const std::vector<Polynomial>& abasis) {
    std::array<int, 27> out{};
    Polynomial rest = p;
    for (std::size_t i = 0; i < abasis.size(); ++i) {
        const auto& [key, sign] = *abasis[i].terms().begin();
        Rational c = rest.coeff(key) * sign;
        if (c != 0) {
            if (!is_integer(c)) throw std::logic_error("non-integer a-basis coordinate");
            out[i] = static_cast<int>(c.get_num().get_si());
            Polynomial q = abasis[i];
            q *= c;
            rest -= q;
        }
    }
    if (!rest.is_zero()) throw std::logic_error("polynomial is not in the a-basis span");
    return out;
}

} // namespace

std::vector<std::array<int, 27>> gd_relation_vectors(const Signature& gd_sig) {
    int circ = gd_sig.op_index("circ");
    int lie = gd_sig.op_index("lie");
    auto C = [&](Term a, Term b) { return Term::app(circ, a, b); };
    auto L = [&](Term a, Term b) { return Term::app(lie, a, b); };
    auto P = [&](Term t, Rational c = Rational(1)) { return term_poly(t, gd_sig, c); };
    auto x = [](int i) { return Term::var(i); };

    auto jacobi = [&](Term a, Term b, Term c) {
        return P(L(L(a, b), c)) + P(L(L(b, c), a)) + P(L(L(c, a), b));
    };
    auto rcomm = [&](Term a, Term b, Term c) { return P(C(C(a, b), c)) - P(C(C(a, c), b)); };
    auto lsymm = [&](Term a, Term b, Term c) {
        return P(C(C(a, b), c)) - P(C(a, C(b, c))) - P(C(C(b, a), c)) + P(C(b, C(a, c)));
    };
    auto gd1 = [&](Term a, Term b, Term c) {
        return P(L(a, C(b, c))) - P(L(c, C(b, a))) + P(C(L(b, a), c)) - P(C(L(b, c), a)) -
               P(C(b, L(a, c)));
    };

    std::vector<Polynomial> rels = {
        jacobi(x(1), x(2), x(3)),
        rcomm(x(1), x(2), x(3)),
        rcomm(x(2), x(1), x(3)),
        rcomm(x(3), x(2), x(1)),
        lsymm(x(1), x(2), x(3)),
        lsymm(x(1), x(3), x(2)),
        lsymm(x(3), x(2), x(1)),
        gd1(x(2), x(1), x(3)),
        gd1(x(1), x(2), x(3)),
        gd1(x(2), x(3), x(1)),
    };

    auto abasis = gd_a_basis(gd_sig);
    std::vector<std::array<int, 27>> rows;
    for (const auto& r : rels) rows.push_back(a_coords(r, abasis));
    return rows;
}

// ---- generic Koszul dual ----

KoszulDual koszul_dual_degree3(const OperadPresentation& pres, const DualDictionary& dict) {
    pres.validate();
    O3Space o3 = o3_space(pres.sig);
    std::size_t m = o3.e_basis.size();
    if (dict.dict.size() != m)
        throw std::invalid_argument("dual dictionary size does not match the generator space");

    // Validate the dictionary against the sign-twisted dual action: with
    // act(e_i,(12)) = sum_j A[i][j] e_j, the duals transform by B = -A^T.
    std::vector<Vec> A = degree2_action(pres.sig, o3.e_basis);
    Permutation swap12 = Permutation::transposition(2, 1, 2);
    for (std::size_t i = 0; i < m; ++i) {
        Polynomial lhs = act_permutation(dict.dict[i], swap12, dict.dual_sig);
        Polynomial rhs;
        for (std::size_t j = 0; j < m; ++j) {
            Rational b = -A[j][i];
            if (b != 0) {
                Polynomial q = dict.dict[j];
                q *= b;
                rhs += q;
            }
        }
        if (lhs != rhs)
            throw std::invalid_argument(
                "dual dictionary does not intertwine the sign-twisted S2-action");
    }

    // U = S3-closure of the relations, in O3 coordinates.
    RowSpace U(o3.dim());
    for (const auto& rel : pres.relations)
        for (const auto& s : symmetric_group(3))
            U.insert(o3.coords(act_permutation(rel, s, pres.sig)));

    // U^perp under <(s,i,j)', (t,k,l)> = delta sgn(s) delta delta: scale the
    // id-block by +1 and the (13), (23) blocks by -1, then take the
    // nullspace.
    RowSpace scaled(o3.dim());
    for (const auto& row : U.rows()) {
        Vec w = row;
        for (std::size_t s = 1; s < 3; ++s)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) w[o3.index(s, i, j)] = -w[o3.index(s, i, j)];
        scaled.insert(w);
    }

    KoszulDual out;
    out.dim_U = U.dim();
    std::vector<Vec> perp = scaled.nullspace();
    out.dim_U_perp = perp.size();

    // Convert U^perp vectors to polynomials on the dual operations:
    // (s,i,j)' -> s . dict_i(dict_j(x1,x2), x3).
    for (const auto& v : perp) {
        Polynomial p;
        for (std::size_t s = 0; s < 3; ++s) {
            Permutation rep = coset_rep(s);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    Rational c = v[o3.index(s, i, j)];
                    if (c == 0) continue;
                    std::map<int, Polynomial> a;
                    a[1] = dict.dict[j];
                    a[2] = term_poly(Term::var(3), dict.dual_sig);
                    Polynomial comp = substitute_poly(dict.dict[i], a, dict.dual_sig);
                    comp = act_permutation(comp, rep, dict.dual_sig);
                    comp *= c;
                    p += comp;
                }
        }
        if (!p.is_zero()) out.dual_relations.push_back(std::move(p));
    }
    return out;
}

} // namespace gdop
