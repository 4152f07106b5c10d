#include "gdop/bicom.hpp"

#include "gdop/comder.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gdop {

BiComMonomial bicom_monomial(std::vector<DWord> letters, int star_count) {
    if (star_count < 0 || star_count >= static_cast<int>(letters.size()))
        throw std::invalid_argument("bicom monomial needs a nonempty (.)-part");
    std::sort(letters.begin(), letters.end());
    return BiComMonomial{std::move(letters), star_count};
}

BiComPoly bicom_var(int index) {
    return BiComPoly::monomial(bicom_monomial({DWord{0, index}}, 0));
}

namespace {

BiComPoly product(const BiComPoly& a, const BiComPoly& b, int extra) {
    BiComPoly out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<DWord> ls = ma.letters;
            ls.insert(ls.end(), mb.letters.begin(), mb.letters.end());
            out.add(bicom_monomial(std::move(ls), ma.star_count + mb.star_count + extra),
                    ca * cb);
        }
    return out;
}

} // namespace

BiComPoly bicom_star(const BiComPoly& a, const BiComPoly& b) { return product(a, b, 1); }
BiComPoly bicom_odot(const BiComPoly& a, const BiComPoly& b) { return product(a, b, 0); }

BiComPoly bicom_d(const BiComPoly& a) {
    BiComPoly out;
    for (const auto& [m, c] : a.terms())
        for (std::size_t i = 0; i < m.letters.size(); ++i) {
            std::vector<DWord> ls = m.letters;
            ls[i].s += 1;
            out.add(bicom_monomial(std::move(ls), m.star_count), c);
        }
    return out;
}

int bicom_weight(const BiComMonomial& m) {
    int d = 0;
    for (const auto& l : m.letters) d += l.s;
    return d - (static_cast<int>(m.letters.size()) - m.star_count);
}

BiComPoly bicom_eval(const Term& t, int ast_op, int odot_op) {
    switch (t.kind()) {
        case Term::Kind::Var:
            return bicom_var(t.var_index());
        case Term::Kind::Der:
            return bicom_d(bicom_eval(t.child(), ast_op, odot_op));
        case Term::Kind::App: {
            BiComPoly l = bicom_eval(t.left(), ast_op, odot_op);
            BiComPoly r = bicom_eval(t.right(), ast_op, odot_op);
            if (t.op() == ast_op) return bicom_star(l, r);
            if (t.op() == odot_op) return bicom_odot(l, r);
            throw std::invalid_argument("bicom_eval: term contains a foreign operation");
        }
    }
    throw std::logic_error("unreachable");
}

ComMonomial bicom_collapse(const BiComMonomial& m) { return com_monomial(m.letters); }

namespace {
std::string print_dword(const DWord& l) {
    std::string s = "x" + std::to_string(l.var);
    for (int i = 0; i < l.s; ++i) s = "(d " + s + ")";
    return s;
}
} // namespace

std::string print_bicom_monomial(const BiComMonomial& m) {
    std::string s = "(bm (ast";
    for (int i = 0; i < m.star_count; ++i) s += " " + print_dword(m.letters[static_cast<std::size_t>(i)]);
    s += ") (odot";
    for (std::size_t i = static_cast<std::size_t>(m.star_count); i < m.letters.size(); ++i)
        s += " " + print_dword(m.letters[i]);
    return s + "))";
}

std::string print_bicom_poly(const BiComPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c) << " " << print_bicom_monomial(m);
    }
    return os.str();
}

} // namespace gdop
