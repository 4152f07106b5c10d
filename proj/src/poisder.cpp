#include "gdop/poisder.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gdop {

PoisMonomial pois_monomial(std::vector<Word> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Word& a, const Word& b) { return WordLess{}(a, b); });
    return PoisMonomial{std::move(factors)};
}

PoisPoly pois_var(int index) {
    return PoisPoly::monomial(pois_monomial({Word{DWord{0, index}}}));
}

PoisPoly pois_mul(const PoisPoly& a, const PoisPoly& b) {
    PoisPoly out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<Word> fs = ma.factors;
            fs.insert(fs.end(), mb.factors.begin(), mb.factors.end());
            out.add(pois_monomial(std::move(fs)), ca * cb);
        }
    return out;
}

namespace {

PoisPoly from_lie(const LiePoly& lp, const std::vector<Word>& other_factors) {
    PoisPoly out;
    for (const auto& [w, c] : lp.terms()) {
        std::vector<Word> fs = other_factors;
        fs.push_back(w);
        out.add(pois_monomial(std::move(fs)), c);
    }
    return out;
}

} // namespace

PoisPoly pois_bracket(const PoisPoly& a, const PoisPoly& b) {
    PoisPoly out;
    // Leibniz on both sides: {f1...fm, g1...gk} = sum_ij (prod != i)(prod != j){fi,gj}.
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Rational c = ca * cb;
            for (std::size_t i = 0; i < ma.factors.size(); ++i)
                for (std::size_t j = 0; j < mb.factors.size(); ++j) {
                    std::vector<Word> rest;
                    for (std::size_t k = 0; k < ma.factors.size(); ++k)
                        if (k != i) rest.push_back(ma.factors[k]);
                    for (std::size_t k = 0; k < mb.factors.size(); ++k)
                        if (k != j) rest.push_back(mb.factors[k]);
                    LiePoly br = lie_bracket(ma.factors[i], mb.factors[j]);
                    PoisPoly part = from_lie(br, rest);
                    part *= c;
                    out += part;
                }
        }
    return out;
}

PoisPoly pois_d(const PoisPoly& a) {
    PoisPoly out;
    for (const auto& [m, c] : a.terms()) {
        for (std::size_t i = 0; i < m.factors.size(); ++i) {
            std::vector<Word> rest;
            for (std::size_t k = 0; k < m.factors.size(); ++k)
                if (k != i) rest.push_back(m.factors[k]);
            PoisPoly part = from_lie(lie_derive(m.factors[i]), rest);
            part *= c;
            out += part;
        }
    }
    return out;
}

int pois_weight(const PoisMonomial& m) {
    int wt = 0;
    for (const auto& f : m.factors) {
        // A bracketed LS word of length l with D d's: l letters of weight -1,
        // D increments, l-1 brackets each adding 1.
        wt += -static_cast<int>(f.size()) + d_degree(f) + (static_cast<int>(f.size()) - 1);
    }
    return wt;
}

int pois_d_degree(const PoisMonomial& m) {
    int d = 0;
    for (const auto& f : m.factors) d += d_degree(f);
    return d;
}

PoisPoly poisder_eval(const Term& t, int mul_op, int lie_op) {
    switch (t.kind()) {
        case Term::Kind::Var:
            return pois_var(t.var_index());
        case Term::Kind::Der:
            return pois_d(poisder_eval(t.child(), mul_op, lie_op));
        case Term::Kind::App: {
            PoisPoly l = poisder_eval(t.left(), mul_op, lie_op);
            PoisPoly r = poisder_eval(t.right(), mul_op, lie_op);
            if (t.op() == mul_op) return pois_mul(l, r);
            if (t.op() == lie_op) return pois_bracket(l, r);
            throw std::invalid_argument("poisder_eval: term contains a foreign operation");
        }
    }
    throw std::logic_error("unreachable");
}

PoisPoly poisder_normal_form(const Polynomial& p, const Signature& sig) {
    int mul_op = sig.op_index("mul");
    int lie_op = sig.op_index("lie");
    PoisPoly out;
    for (const auto& [t, c] : p.terms()) {
        PoisPoly q = poisder_eval(t, mul_op, lie_op);
        q *= c;
        out += q;
    }
    return out;
}

namespace {

// Evaluate the canonical bracketing of w with the letter d^k(var) replaced by
// d^k(value); other letters stay themselves.
PoisPoly eval_factor_subst(const Word& w, int var, const PoisPoly& value) {
    if (w.size() == 1) {
        if (w[0].var != var) return PoisPoly::monomial(pois_monomial({w}));
        PoisPoly v = value;
        for (int i = 0; i < w[0].s; ++i) v = pois_d(v);
        return v;
    }
    auto [l, r] = standard_split(w);
    return pois_bracket(eval_factor_subst(l, var, value), eval_factor_subst(r, var, value));
}

bool factor_contains(const Word& w, int var) {
    for (const auto& l : w)
        if (l.var == var) return true;
    return false;
}

} // namespace

PoisPoly poisder_substitute(const PoisPoly& p, int var, const PoisPoly& value) {
    PoisPoly out;
    for (const auto& [m, c] : p.terms()) {
        PoisPoly acc = PoisPoly::monomial(pois_monomial({}));
        for (const auto& f : m.factors) {
            PoisPoly fac = factor_contains(f, var) ? eval_factor_subst(f, var, value)
                                                   : PoisPoly::monomial(pois_monomial({f}));
            acc = pois_mul(acc, fac);
        }
        acc *= c;
        out += acc;
    }
    return out;
}

const Signature& poisder_signature() {
    static const Signature sig({{"mul", Symmetry::Symmetric}, {"lie", Symmetry::Antisymmetric}},
                               true);
    return sig;
}

namespace {

std::string print_dword(const DWord& l) {
    std::string s = "x" + std::to_string(l.var);
    for (int i = 0; i < l.s; ++i) s = "(d " + s + ")";
    return s;
}

std::string print_bracketing(const Word& w) {
    if (w.size() == 1) return print_dword(w[0]);
    auto [l, r] = standard_split(w);
    return "(lie " + print_bracketing(l) + " " + print_bracketing(r) + ")";
}

} // namespace

std::string print_pois_monomial(const PoisMonomial& m) {
    std::string s = "(pm";
    for (const auto& f : m.factors) s += " " + print_bracketing(f);
    return s + ")";
}

Term pois_monomial_term(const PoisMonomial& m, const Signature& sig) {
    int mul_op = sig.op_index("mul");
    int lie_op = sig.op_index("lie");
    if (m.factors.empty()) throw std::invalid_argument("empty monomial");
    Term t = canonical_bracketing(m.factors.back(), lie_op);
    for (std::size_t i = m.factors.size() - 1; i-- > 0;)
        t = Term::app(mul_op, canonical_bracketing(m.factors[i], lie_op), t);
    return t;
}

PoisMonomial parse_pois_monomial(const std::string& text) {
    const Signature& sig = poisder_signature();
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '(pm ...'", pos);
    ++pos;
    skip_ws();
    if (text.compare(pos, 2, "pm") != 0) throw ParseError("expected head 'pm'", pos);
    pos += 2;
    PoisPoly prod = PoisPoly::monomial(pois_monomial({}));
    bool any = false;
    while (true) {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unterminated (pm ...)", pos);
        if (text[pos] == ')') {
            ++pos;
            break;
        }
        std::size_t start = pos;
        if (text[pos] == '(') {
            int depth = 0;
            do {
                if (text[pos] == '(') ++depth;
                if (text[pos] == ')') --depth;
                ++pos;
            } while (pos < text.size() && depth > 0);
            if (depth != 0) throw ParseError("unbalanced parentheses", start);
        } else {
            while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
                   text[pos] != ')')
                ++pos;
        }
        Term f = parse_term(text.substr(start, pos - start), sig);
        prod = pois_mul(prod, poisder_eval(f, sig.op_index("mul"), sig.op_index("lie")));
        any = true;
    }
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing input", pos);
    if (!any) throw ParseError("empty (pm) monomial", 0);
    if (prod.size() != 1 || prod.terms().begin()->second != 1)
        throw std::invalid_argument("input is not a normal monomial (evaluates to " +
                                    print_pois_poly(prod) + ")");
    return prod.terms().begin()->first;
}

std::string print_pois_poly(const PoisPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c) << " " << print_pois_monomial(m);
    }
    return os.str();
}

} // namespace gdop
