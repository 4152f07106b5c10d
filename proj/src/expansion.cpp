#include "gdop/expansion.hpp"

#include <functional>
#include <sstream>

namespace gdop {

const Signature& gd_source_signature() {
    static const Signature sig({{"circ", Symmetry::None}, {"lie", Symmetry::None}}, false);
    return sig;
}

const Signature& gd_dual_source_signature() {
    static const Signature sig({{"ast", Symmetry::None}, {"star", Symmetry::None}}, false);
    return sig;
}

const Signature& derived_source_signature() {
    static const Signature sig(
        {{"prec", Symmetry::None}, {"succ", Symmetry::None}, {"mul", Symmetry::None}}, false);
    return sig;
}

const Signature& gen_derived_source_signature() {
    static const Signature sig({{"ast", Symmetry::None},
                                {"circ", Symmetry::None},
                                {"lie", Symmetry::None},
                                {"succ", Symmetry::None}},
                               false);
    return sig;
}

const Signature& magder_signature() {
    static const Signature sig({{"mul", Symmetry::None}}, true);
    return sig;
}

const Signature& loose_signature() {
    static const Signature sig({{"mul", Symmetry::Symmetric}, {"lie", Symmetry::None}}, true);
    return sig;
}

namespace {

int need_op(const Signature& sig, const char* name) {
    int i = sig.op_index(name);
    if (i < 0) throw std::invalid_argument(std::string("signature lacks operation ") + name);
    return i;
}

template <class Poly, class EvalVar, class EvalOp, class EvalD>
Poly eval_terms(const Polynomial& p, EvalVar var, EvalOp op, EvalD der) {
    std::function<Poly(const Term&)> go = [&](const Term& t) -> Poly {
        switch (t.kind()) {
            case Term::Kind::Var:
                return var(t.var_index());
            case Term::Kind::Der:
                return der(go(t.child()));
            case Term::Kind::App:
                return op(t.op(), go(t.left()), go(t.right()));
        }
        throw std::logic_error("unreachable");
    };
    Poly out;
    for (const auto& [t, c] : p.terms()) {
        Poly q = go(t);
        q *= c;
        out += q;
    }
    return out;
}

} // namespace

PoisPoly expand_gd(const Polynomial& p, const Signature& src) {
    int circ = need_op(src, "circ"), lie = need_op(src, "lie");
    return eval_terms<PoisPoly>(
        p, [](int v) { return pois_var(v); },
        [&](int op, const PoisPoly& a, const PoisPoly& b) {
            if (op == circ) return pois_mul(a, pois_d(b));
            if (op == lie) return pois_bracket(a, b);
            throw std::invalid_argument("operation not covered by map gd");
        },
        [](const PoisPoly& a) { return pois_d(a); });
}

ComPoly expand_gd_dual(const Polynomial& p, const Signature& src) {
    int ast = need_op(src, "ast"), star = need_op(src, "star");
    return eval_terms<ComPoly>(
        p, [](int v) { return com_var(v); },
        [&](int op, const ComPoly& a, const ComPoly& b) {
            if (op == ast) return com_mul(a, b);
            if (op == star) return com_mul(com_d(a), b);
            throw std::invalid_argument("operation not covered by map gd-dual");
        },
        [](const ComPoly& a) { return com_d(a); });
}

BiComPoly expand_bicom_dual(const Polynomial& p, const Signature& src) {
    int ast = need_op(src, "ast"), star = need_op(src, "star");
    return eval_terms<BiComPoly>(
        p, [](int v) { return bicom_var(v); },
        [&](int op, const BiComPoly& a, const BiComPoly& b) {
            if (op == ast) return bicom_star(a, b);
            if (op == star) return bicom_odot(bicom_d(a), b);
            throw std::invalid_argument("operation not covered by map bicom-dual");
        },
        [](const BiComPoly& a) { return bicom_d(a); });
}

PoisPoly expand_gen_derived(const Polynomial& p, const Signature& src) {
    int ast = src.op_index("ast"), circ = src.op_index("circ");
    int lie = src.op_index("lie"), succ = src.op_index("succ");
    return eval_terms<PoisPoly>(
        p, [](int v) { return pois_var(v); },
        [&](int op, const PoisPoly& a, const PoisPoly& b) {
            if (op == ast) return pois_mul(a, b);
            if (op == circ) return pois_mul(a, pois_d(b));
            if (op == lie) return pois_bracket(a, b);
            if (op == succ) return pois_bracket(pois_d(a), b);
            throw std::invalid_argument("operation not covered by map gen-derived");
        },
        [](const PoisPoly& a) { return pois_d(a); });
}

WordPoly expand_derived_assoc(const Polynomial& p, const Signature& src) {
    int prec = src.op_index("prec"), succ = src.op_index("succ"), mul = src.op_index("mul");
    auto conc = [](const WordPoly& a, const WordPoly& b) {
        WordPoly out;
        for (const auto& [wa, ca] : a.terms())
            for (const auto& [wb, cb] : b.terms()) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                out.add(std::move(w), ca * cb);
            }
        return out;
    };
    auto der = [](const WordPoly& a) {
        WordPoly out;
        for (const auto& [w, c] : a.terms())
            for (std::size_t i = 0; i < w.size(); ++i) {
                Word v = w;
                v[i].s += 1;
                out.add(std::move(v), c);
            }
        return out;
    };
    return eval_terms<WordPoly>(
        p, [](int v) { return WordPoly::monomial(Word{DWord{0, v}}); },
        [&](int op, const WordPoly& a, const WordPoly& b) {
            if (op == prec) return conc(a, der(b));
            if (op == succ) return conc(der(a), b);
            if (op == mul) return conc(a, b);
            throw std::invalid_argument("operation not covered by map derived");
        },
        der);
}

ComPoly expand_derived_com(const Polynomial& p, const Signature& src) {
    int prec = src.op_index("prec"), succ = src.op_index("succ"), mul = src.op_index("mul");
    return eval_terms<ComPoly>(
        p, [](int v) { return com_var(v); },
        [&](int op, const ComPoly& a, const ComPoly& b) {
            if (op == prec) return com_mul(a, com_d(b));
            if (op == succ) return com_mul(com_d(a), b);
            if (op == mul) return com_mul(a, b);
            throw std::invalid_argument("operation not covered by map derived");
        },
        [](const ComPoly& a) { return com_d(a); });
}

namespace {

// Free differential term algebra over `target`: d is pushed to the leaves by
// the Leibniz rule, products are canonical term keys.
Polynomial termder_mul(int op, const Polynomial& a, const Polynomial& b, const Signature& target) {
    Polynomial out;
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms())
            out += term_poly(Term::app(op, ta, tb), target, ca * cb);
    return out;
}

Polynomial termder_d(const Polynomial& a, const Signature& target) {
    std::function<Polynomial(const Term&)> der = [&](const Term& t) -> Polynomial {
        switch (t.kind()) {
            case Term::Kind::Var:
                return term_poly(Term::der(t), target);
            case Term::Kind::Der: {
                // Normal keys carry d only as chains over leaves.
                Term u = t;
                while (u.kind() == Term::Kind::Der) u = u.child();
                if (u.kind() != Term::Kind::Var)
                    throw std::logic_error("termder_d: non-normal derivation node");
                return term_poly(Term::der(t), target);
            }
            case Term::Kind::App: {
                Polynomial out;
                Polynomial dl = der(t.left());
                for (const auto& [l, c] : dl.terms())
                    out += term_poly(Term::app(t.op(), l, t.right()), target, c);
                Polynomial dr = der(t.right());
                for (const auto& [r, c] : dr.terms())
                    out += term_poly(Term::app(t.op(), t.left(), r), target, c);
                return out;
            }
        }
        throw std::logic_error("unreachable");
    };
    Polynomial out;
    for (const auto& [t, c] : a.terms()) {
        Polynomial q = der(t);
        q *= c;
        out += q;
    }
    return out;
}

} // namespace

Polynomial expand_derived_magma(const Polynomial& p, const Signature& src) {
    int prec = src.op_index("prec"), succ = src.op_index("succ"), mul = src.op_index("mul");
    const Signature& tgt = magder_signature();
    int tmul = 0;
    return eval_terms<Polynomial>(
        p, [&](int v) { return term_poly(Term::var(v), tgt); },
        [&](int op, const Polynomial& a, const Polynomial& b) {
            if (op == prec) return termder_mul(tmul, a, termder_d(b, tgt), tgt);
            if (op == succ) return termder_mul(tmul, termder_d(a, tgt), b, tgt);
            if (op == mul) return termder_mul(tmul, a, b, tgt);
            throw std::invalid_argument("operation not covered by map derived");
        },
        [&](const Polynomial& a) { return termder_d(a, tgt); });
}

Polynomial expand_gd_loose(const Polynomial& p, const Signature& src) {
    int circ = need_op(src, "circ"), lie = need_op(src, "lie");
    const Signature& tgt = loose_signature();
    int tmul = 0, tlie = 1;
    return eval_terms<Polynomial>(
        p, [&](int v) { return term_poly(Term::var(v), tgt); },
        [&](int op, const Polynomial& a, const Polynomial& b) {
            if (op == circ) return termder_mul(tmul, a, termder_d(b, tgt), tgt);
            if (op == lie) return termder_mul(tlie, a, b, tgt);
            throw std::invalid_argument("operation not covered by map gd-loose");
        },
        [&](const Polynomial& a) { return termder_d(a, tgt); });
}

namespace {

template <class Poly, class Printer>
Verdict make_verdict(const Poly& q, Printer pr) {
    Verdict v;
    v.holds = q.is_zero();
    v.surviving_count = q.size();
    for (const auto& [m, c] : q.terms()) v.survivors.push_back(to_string(c) + " " + pr(m));
    return v;
}

} // namespace

Verdict verify_identity(const Polynomial& p, const Signature& src, const std::string& map,
                        DerivedTarget target) {
    int deg = multilinear_degree(p);
    if (deg < 0 && !p.is_zero())
        throw std::invalid_argument("verify_identity: polynomial must be multilinear");
    if (map == "gd")
        return make_verdict(expand_gd(p, src), print_pois_monomial);
    if (map == "gd-dual")
        return make_verdict(expand_gd_dual(p, src), print_com_monomial);
    if (map == "bicom-dual")
        return make_verdict(expand_bicom_dual(p, src), print_bicom_monomial);
    if (map == "gen-derived")
        return make_verdict(expand_gen_derived(p, src), print_pois_monomial);
    if (map == "gd-loose")
        return make_verdict(expand_gd_loose(p, src),
                            [](const Term& t) { return print_term(t, loose_signature()); });
    if (map == "derived") {
        switch (target) {
            case DerivedTarget::Magma:
                return make_verdict(expand_derived_magma(p, src), [](const Term& t) {
                    return print_term(t, magder_signature());
                });
            case DerivedTarget::Associative:
                return make_verdict(expand_derived_assoc(p, src), [](const Word& w) {
                    std::string s = "(w";
                    for (const auto& l : w) {
                        std::string ls = "x" + std::to_string(l.var);
                        for (int i = 0; i < l.s; ++i) ls = "(d " + ls + ")";
                        s += " " + ls;
                    }
                    return s + ")";
                });
            case DerivedTarget::Commutative:
                return make_verdict(expand_derived_com(p, src), print_com_monomial);
        }
    }
    throw std::invalid_argument("unknown expansion map: " + map);
}

int term_weight(const Term& t, const std::vector<int>& op_increment) {
    switch (t.kind()) {
        case Term::Kind::Var:
            return -1;
        case Term::Kind::Der:
            return term_weight(t.child(), op_increment) + 1;
        case Term::Kind::App:
            return term_weight(t.left(), op_increment) + term_weight(t.right(), op_increment) +
                   op_increment.at(static_cast<std::size_t>(t.op()));
    }
    throw std::logic_error("unreachable");
}

} // namespace gdop
