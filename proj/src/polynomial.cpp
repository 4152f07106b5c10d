#include "gdop/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace gdop {

Polynomial term_poly(const Term& t, const Signature& sig, Rational c) {
    auto [key, sign] = canonicalize(t, sig);
    Polynomial p;
    if (sign != 0) p.add(key, sign * c);
    return p;
}

Term substitute(const Term& t, const std::map<int, Term>& assignment) {
    switch (t.kind()) {
        case Term::Kind::Var: {
            auto it = assignment.find(t.var_index());
            if (it == assignment.end())
                throw std::invalid_argument("missing assignment for x" +
                                            std::to_string(t.var_index()));
            return it->second;
        }
        case Term::Kind::Der:
            return Term::der(substitute(t.child(), assignment));
        case Term::Kind::App:
            return Term::app(t.op(), substitute(t.left(), assignment),
                             substitute(t.right(), assignment));
    }
    throw std::logic_error("unreachable");
}

namespace {

void count_vars(const Term& t, std::map<int, int>& counts) {
    switch (t.kind()) {
        case Term::Kind::Var:
            counts[t.var_index()]++;
            return;
        case Term::Kind::Der:
            count_vars(t.child(), counts);
            return;
        case Term::Kind::App:
            count_vars(t.left(), counts);
            count_vars(t.right(), counts);
            return;
    }
}

} // namespace

Polynomial substitute_poly(const Term& t, const std::map<int, Polynomial>& assignment,
                           const Signature& sig) {
    // Simultaneous substitution, expanded bottom-up by bilinearity.
    switch (t.kind()) {
        case Term::Kind::Var: {
            auto it = assignment.find(t.var_index());
            if (it != assignment.end()) return it->second;
            return term_poly(t, sig);
        }
        case Term::Kind::Der: {
            Polynomial inner = substitute_poly(t.child(), assignment, sig);
            Polynomial out;
            for (const auto& [u, c] : inner.terms()) out += term_poly(Term::der(u), sig, c);
            return out;
        }
        case Term::Kind::App: {
            Polynomial l = substitute_poly(t.left(), assignment, sig);
            Polynomial r = substitute_poly(t.right(), assignment, sig);
            Polynomial out;
            for (const auto& [ul, cl] : l.terms())
                for (const auto& [ur, cr] : r.terms())
                    out += term_poly(Term::app(t.op(), ul, ur), sig, cl * cr);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

Polynomial substitute_poly(const Polynomial& p, const std::map<int, Polynomial>& assignment,
                           const Signature& sig) {
    Polynomial out;
    for (const auto& [t, c] : p.terms()) {
        Polynomial q = substitute_poly(t, assignment, sig);
        q *= c;
        out += q;
    }
    return out;
}

bool is_multilinear(const Polynomial& p, int n) {
    for (const auto& [t, c] : p.terms()) {
        (void)c;
        if (t.d_degree() != 0) return false;
        std::map<int, int> counts;
        count_vars(t, counts);
        if (static_cast<int>(counts.size()) != n) return false;
        for (int i = 1; i <= n; ++i) {
            auto it = counts.find(i);
            if (it == counts.end() || it->second != 1) return false;
        }
    }
    return true;
}

int multilinear_degree(const Polynomial& p) {
    if (p.is_zero()) return -1;
    int n = p.terms().begin()->first.degree();
    return is_multilinear(p, n) ? n : -1;
}

Polynomial act_permutation(const Polynomial& p, const Permutation& perm, const Signature& sig) {
    if (!p.is_zero() && !is_multilinear(p, perm.n()))
        throw std::invalid_argument("act_permutation: polynomial is not multilinear of degree " +
                                    std::to_string(perm.n()));
    std::map<int, Term> assignment;
    for (int i = 1; i <= perm.n(); ++i) assignment.emplace(i, Term::var(perm(i)));
    Polynomial out;
    for (const auto& [t, c] : p.terms()) out += term_poly(substitute(t, assignment), sig, c);
    return out;
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

namespace {

// All planar binary trees on the given leaf sequence, decorated with every
// choice of operation.
void tree_shapes(const Signature& sig, const std::vector<Term>& leaves, int lo, int hi,
                 std::vector<Term>& out) {
    if (hi - lo == 1) {
        out.push_back(leaves[static_cast<std::size_t>(lo)]);
        return;
    }
    for (int mid = lo + 1; mid < hi; ++mid) {
        std::vector<Term> ls, rs;
        tree_shapes(sig, leaves, lo, mid, ls);
        tree_shapes(sig, leaves, mid, hi, rs);
        for (const auto& l : ls)
            for (const auto& r : rs)
                for (std::size_t op = 0; op < sig.op_count(); ++op)
                    out.push_back(Term::app(static_cast<int>(op), l, r));
    }
}

} // namespace

std::vector<Term> multilinear_monomials(const Signature& sig, int n) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    std::set<Term, TermLess> keys;
    do {
        std::vector<Term> leaves;
        leaves.reserve(labels.size());
        for (int v : labels) leaves.push_back(Term::var(v));
        std::vector<Term> trees;
        tree_shapes(sig, leaves, 0, n, trees);
        for (const auto& t : trees) {
            auto [key, sign] = canonicalize(t, sig);
            if (sign != 0) keys.insert(key);
        }
    } while (std::next_permutation(labels.begin(), labels.end()));
    return {keys.begin(), keys.end()};
}

std::string print_polynomial(const Polynomial& p, const Signature& sig) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c) << " " << print_term(t, sig);
    }
    return os.str();
}

Polynomial parse_polynomial(const std::string& text, const Signature& sig) {
    Polynomial out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        // coefficient token
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
               text[pos] != '(')
            ++pos;
        std::string ctok = text.substr(start, pos - start);
        if (ctok.empty()) throw ParseError("expected coefficient", start);
        Rational c;
        try {
            c = Rational(ctok);
        } catch (const std::exception&) {
            throw ParseError("bad coefficient '" + ctok + "'", start);
        }
        if (c.get_den() == 0) throw ParseError("zero denominator in '" + ctok + "'", start);
        c.canonicalize();
        // term: read a balanced s-expression or a bare variable
        skip_ws();
        if (pos >= text.size()) throw ParseError("expected term after coefficient", pos);
        std::size_t tstart = pos;
        if (text[pos] == '(') {
            int depth = 0;
            do {
                if (text[pos] == '(') ++depth;
                if (text[pos] == ')') --depth;
                ++pos;
            } while (pos < text.size() && depth > 0);
            if (depth != 0) throw ParseError("unbalanced parentheses", tstart);
        } else {
            while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
                ++pos;
        }
        Term t = parse_term(text.substr(tstart, pos - tstart), sig);
        out += term_poly(t, sig, c);
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '+') throw ParseError("expected '+'", pos);
        ++pos;
    }
    return out;
}

} // namespace gdop
