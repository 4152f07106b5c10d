#include "gdop/operad.hpp"

#include <algorithm>
#include <sstream>

namespace gdop {

void OperadPresentation::validate() const {
    for (std::size_t i = 0; i < relations.size(); ++i) {
        int deg = multilinear_degree(relations[i]);
        if (deg != 3)
            throw std::invalid_argument("relation '" + relation_names[i] +
                                        "' is not multilinear of degree 3");
    }
}

Vec ComponentIndex::to_vec(const Polynomial& p) const {
    Vec v(basis.size(), Rational(0));
    for (const auto& [t, c] : p.terms()) v[index_of(t)] = c;
    return v;
}

Polynomial ComponentIndex::to_poly(const Vec& v) const {
    Polynomial p;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (v[i] != 0) p.add(basis[i], v[i]);
    return p;
}

std::size_t ComponentIndex::index_of(const Term& t) const {
    auto it = std::lower_bound(basis.begin(), basis.end(), t, TermLess{});
    if (it == basis.end() || !(*it == t))
        throw std::invalid_argument("monomial outside the component basis");
    return static_cast<std::size_t>(it - basis.begin());
}

ComponentIndex component_index(const Signature& sig, int n) {
    return ComponentIndex{multilinear_monomials(sig, n)};
}

namespace {

std::string perm_str(const Permutation& s) {
    std::string out = "[";
    for (int i = 1; i <= s.n(); ++i) out += (i > 1 ? " " : "") + std::to_string(s(i));
    return out + "]";
}

} // namespace

std::vector<GeneratedRow> consequence_generators(const OperadPresentation& pres, int n,
                                                 const std::vector<Polynomial>& extra,
                                                 const std::vector<std::string>& extra_names) {
    if (n < 2 || n > 4) throw std::invalid_argument("unsupported degree (2..4)");
    std::vector<GeneratedRow> seeds;
    for (std::size_t r = 0; r < pres.relations.size(); ++r) {
        const Polynomial& rel = pres.relations[r];
        const std::string& rname = pres.relation_names[r];
        if (n == 3) {
            seeds.push_back({rname, rel});
        } else if (n == 4) {
            // Substitute a generator into each slot of the relation, and
            // wrap the relation with each generator on each side.
            for (int slot = 1; slot <= 3; ++slot)
                for (std::size_t op = 0; op < pres.sig.op_count(); ++op) {
                    std::map<int, Polynomial> a;
                    a[slot] = term_poly(
                        Term::app(static_cast<int>(op), Term::var(slot), Term::var(4)), pres.sig);
                    seeds.push_back({rname + " | x" + std::to_string(slot) + ":=(" +
                                         pres.sig.op(static_cast<int>(op)).name + " x" +
                                         std::to_string(slot) + " x4)",
                                     substitute_poly(rel, a, pres.sig)});
                }
            for (std::size_t op = 0; op < pres.sig.op_count(); ++op) {
                Polynomial left, right;
                for (const auto& [t, c] : rel.terms()) {
                    left += term_poly(Term::app(static_cast<int>(op), t, Term::var(4)), pres.sig, c);
                    right += term_poly(Term::app(static_cast<int>(op), Term::var(4), t), pres.sig, c);
                }
                seeds.push_back(
                    {rname + " | (" + pres.sig.op(static_cast<int>(op)).name + " _ x4)", left});
                seeds.push_back(
                    {rname + " | (" + pres.sig.op(static_cast<int>(op)).name + " x4 _)", right});
            }
        }
    }
    for (std::size_t e = 0; e < extra.size(); ++e) {
        int deg = multilinear_degree(extra[e]);
        if (deg != n)
            throw std::invalid_argument("extra relation must be multilinear of degree " +
                                        std::to_string(n));
        std::string nm = e < extra_names.size() ? extra_names[e] : ("extra" + std::to_string(e));
        seeds.push_back({nm, extra[e]});
    }

    std::vector<GeneratedRow> rows;
    for (const auto& seed : seeds) {
        for (const auto& s : symmetric_group(n)) {
            Polynomial q = act_permutation(seed.poly, s, pres.sig);
            if (q.is_zero()) continue;
            rows.push_back({seed.descriptor + " | perm " + perm_str(s), std::move(q)});
        }
    }
    return rows;
}

MultilinearComponent component_basis(const OperadPresentation& pres, int n,
                                     const std::vector<Polynomial>& extra,
                                     const std::vector<std::string>& extra_names,
                                     bool track_combinations) {
    pres.validate();
    MultilinearComponent comp;
    comp.degree = n;
    comp.monomials = component_index(pres.sig, n);
    comp.generators = consequence_generators(pres, n, extra, extra_names);
    comp.consequences = RowSpace(comp.monomials.size(), track_combinations);
    for (const auto& row : comp.generators) comp.consequences.insert(comp.monomials.to_vec(row.poly));
    comp.quotient_dim = comp.monomials.size() - comp.consequences.dim();
    return comp;
}

MembershipResult tideal_membership(const Polynomial& candidate, const OperadPresentation& pres,
                                   const std::vector<Polynomial>& extra, int n) {
    if (!is_multilinear(candidate, n))
        throw std::invalid_argument("candidate must be multilinear of degree " + std::to_string(n));
    std::vector<std::string> extra_names;
    for (std::size_t i = 0; i < extra.size(); ++i) extra_names.push_back("extra" + std::to_string(i));
    MultilinearComponent comp = component_basis(pres, n, extra, extra_names, true);

    Vec cvec = comp.monomials.to_vec(candidate);
    auto red = comp.consequences.reduce(cvec);

    MembershipResult res;
    res.member = red.in_span;
    res.residual = red.residual;
    if (res.member) {
        for (const auto& [id, c] : red.combination)
            res.combination.emplace_back(comp.generators[id].descriptor, c);
        // Re-check: re-expand the combination and compare.
        Polynomial sum;
        for (const auto& [id, c] : red.combination) {
            Polynomial q = comp.generators[id].poly;
            q *= c;
            sum += q;
        }
        res.certificate_ok = (sum == candidate);
    } else {
        res.functional = comp.consequences.separating_functional(red.residual);
        res.functional_dot_candidate = dot(res.functional, cvec);
        // Re-check by dot product against every generated row.
        bool ok = res.functional_dot_candidate != 0;
        for (const auto& row : comp.generators)
            if (dot(res.functional, comp.monomials.to_vec(row.poly)) != 0) ok = false;
        res.certificate_ok = ok;
    }
    return res;
}

Polynomial reduce_mod_consequences(const Polynomial& candidate, const MultilinearComponent& comp) {
    Vec v = comp.monomials.to_vec(candidate);
    auto red = comp.consequences.reduce(v);
    return comp.monomials.to_poly(red.residual);
}

} // namespace gdop
