#include "gdop/comder.hpp"

#include <algorithm>
#include <sstream>

namespace gdop {

ComMonomial com_monomial(std::vector<DWord> letters) {
    std::sort(letters.begin(), letters.end());
    return ComMonomial{std::move(letters)};
}

ComPoly com_var(int index) { return ComPoly::monomial(com_monomial({DWord{0, index}})); }

ComPoly com_mul(const ComPoly& a, const ComPoly& b) {
    ComPoly out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<DWord> ls = ma.letters;
            ls.insert(ls.end(), mb.letters.begin(), mb.letters.end());
            out.add(com_monomial(std::move(ls)), ca * cb);
        }
    return out;
}

ComPoly com_d(const ComPoly& a) {
    ComPoly out;
    for (const auto& [m, c] : a.terms())
        for (std::size_t i = 0; i < m.letters.size(); ++i) {
            std::vector<DWord> ls = m.letters;
            ls[i].s += 1;
            out.add(com_monomial(std::move(ls)), c);
        }
    return out;
}

int com_weight(const ComMonomial& m) {
    int wt = 0;
    for (const auto& l : m.letters) wt += l.s - 1;
    return wt;
}

int com_d_degree(const ComMonomial& m) {
    int d = 0;
    for (const auto& l : m.letters) d += l.s;
    return d;
}

ComPoly comder_eval(const Term& t, int mul_op) {
    switch (t.kind()) {
        case Term::Kind::Var:
            return com_var(t.var_index());
        case Term::Kind::Der:
            return com_d(comder_eval(t.child(), mul_op));
        case Term::Kind::App: {
            if (t.op() != mul_op)
                throw std::invalid_argument("comder_eval: term contains a foreign operation");
            return com_mul(comder_eval(t.left(), mul_op), comder_eval(t.right(), mul_op));
        }
    }
    throw std::logic_error("unreachable");
}

ComPoly comder_substitute(const ComPoly& p, int var, const ComPoly& value) {
    ComPoly out;
    for (const auto& [m, c] : p.terms()) {
        ComPoly acc = ComPoly::monomial(com_monomial({}));
        for (const auto& l : m.letters) {
            ComPoly letter;
            if (l.var == var) {
                letter = value;
                for (int i = 0; i < l.s; ++i) letter = com_d(letter);
            } else {
                letter = ComPoly::monomial(com_monomial({l}));
            }
            acc = com_mul(acc, letter);
        }
        acc *= c;
        out += acc;
    }
    return out;
}

namespace {
std::string print_dword(const DWord& l) {
    std::string s = "x" + std::to_string(l.var);
    for (int i = 0; i < l.s; ++i) s = "(d " + s + ")";
    return s;
}
} // namespace

std::string print_com_monomial(const ComMonomial& m) {
    std::string s = "(cm";
    for (const auto& l : m.letters) s += " " + print_dword(l);
    return s + ")";
}

std::string print_com_poly(const ComPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c) << " " << print_com_monomial(m);
    }
    return os.str();
}

} // namespace gdop
