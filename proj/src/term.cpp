#include "gdop/term.hpp"

#include <cctype>
#include <vector>

namespace gdop {

int compare(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return 0;
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? -1 : 1;
    auto rank = [](Term::Kind k) {
        switch (k) {
            case Term::Kind::Var: return 0;
            case Term::Kind::Der: return 1;
            case Term::Kind::App: return 2;
        }
        return 3;
    };
    if (rank(a.kind()) != rank(b.kind())) return rank(a.kind()) < rank(b.kind()) ? -1 : 1;
    switch (a.kind()) {
        case Term::Kind::Var:
            if (a.var_index() != b.var_index()) return a.var_index() < b.var_index() ? -1 : 1;
            return 0;
        case Term::Kind::Der:
            return compare(a.child(), b.child());
        case Term::Kind::App: {
            if (a.op() != b.op()) return a.op() < b.op() ? -1 : 1;
            if (int c = compare(a.left(), b.left())) return c;
            return compare(a.right(), b.right());
        }
    }
    return 0;
}

std::pair<Term, int> canonicalize(const Term& t, const Signature& sig) {
    switch (t.kind()) {
        case Term::Kind::Var:
            return {t, 1};
        case Term::Kind::Der: {
            auto [c, s] = canonicalize(t.child(), sig);
            if (s == 0) return {c, 0};
            return {Term::der(c), s};
        }
        case Term::Kind::App: {
            auto [l, sl] = canonicalize(t.left(), sig);
            auto [r, sr] = canonicalize(t.right(), sig);
            int sign = sl * sr;
            if (sign == 0) return {t, 0};
            switch (sig.op(t.op()).sym) {
                case Symmetry::None:
                    break;
                case Symmetry::Symmetric:
                    if (compare(r, l) < 0) std::swap(l, r);
                    break;
                case Symmetry::Antisymmetric: {
                    int c = compare(l, r);
                    if (c == 0) return {t, 0};
                    if (c > 0) {
                        std::swap(l, r);
                        sign = -sign;
                    }
                    break;
                }
            }
            return {Term::app(t.op(), l, r), sign};
        }
    }
    throw std::logic_error("unreachable");
}

std::string print_term(const Term& t, const Signature& sig) {
    switch (t.kind()) {
        case Term::Kind::Var:
            return "x" + std::to_string(t.var_index());
        case Term::Kind::Der:
            return "(d " + print_term(t.child(), sig) + ")";
        case Term::Kind::App:
            return "(" + sig.op(t.op()).name + " " + print_term(t.left(), sig) + " " +
                   print_term(t.right(), sig) + ")";
    }
    throw std::logic_error("unreachable");
}

namespace {

struct Parser {
    const std::string& s;
    const Signature& sig;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    std::string token() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
               s[pos] != '(' && s[pos] != ')')
            ++pos;
        if (start == pos) throw ParseError("expected token", pos);
        return s.substr(start, pos - start);
    }

    Term parse() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of input", pos);
        if (s[pos] == '(') {
            std::size_t open = pos;
            ++pos;
            std::string head = token();
            if (head == "d") {
                if (!sig.has_derivation())
                    throw ParseError("derivation symbol d not in signature", open);
                Term inner = parse();
                expect(')');
                return Term::der(inner);
            }
            int op = sig.op_index(head);
            if (op < 0) throw ParseError("unknown operation '" + head + "'", open);
            Term l = parse();
            skip_ws();
            if (pos < s.size() && s[pos] == ')')
                throw ParseError("operation '" + head + "' expects 2 arguments, got 1", pos);
            Term r = parse();
            expect(')');
            return Term::app(op, l, r);
        }
        std::size_t start = pos;
        std::string tok = token();
        if (tok.size() < 2 || tok[0] != 'x')
            throw ParseError("expected variable xN or '(' , got '" + tok + "'", start);
        for (std::size_t i = 1; i < tok.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(tok[i])))
                throw ParseError("bad variable name '" + tok + "'", start);
        int index;
        try {
            index = std::stoi(tok.substr(1));
        } catch (const std::exception&) {
            throw ParseError("variable index out of range in '" + tok + "'", start);
        }
        if (index < 1) throw ParseError("variable indices start at 1", start);
        return Term::var(index);
    }

    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    void expect_end() {
        skip_ws();
        if (pos != s.size()) throw ParseError("trailing input", pos);
    }
};

} // namespace

Term parse_term(const std::string& text, const Signature& sig) {
    Parser p{text, sig};
    Term t = p.parse();
    p.expect_end();
    return t;
}

} // namespace gdop
