#include "gdop/lyndon.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gdop {

std::strong_ordering compare_words(const Word& a, const Word& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (a.size() == b.size()) return std::strong_ordering::equal;
    return a.size() < b.size() ? std::strong_ordering::less : std::strong_ordering::greater;
}

int d_degree(const Word& w) {
    int d = 0;
    for (const auto& l : w) d += l.s;
    return d;
}

bool is_ls_word(const Word& w) {
    if (w.empty()) throw std::invalid_argument("empty word");
    for (std::size_t cut = 1; cut < w.size(); ++cut) {
        Word rot(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
        if (compare_words(w, rot) != std::strong_ordering::greater) return false;
    }
    return true;
}

std::pair<Word, Word> standard_split(const Word& w) {
    if (w.size() < 2) throw std::invalid_argument("no split for a single letter");
    // Longest proper LS suffix.
    for (std::size_t start = 1; start < w.size(); ++start) {
        Word suffix(w.begin() + static_cast<std::ptrdiff_t>(start), w.end());
        if (is_ls_word(suffix)) {
            Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(start));
            if (!is_ls_word(prefix))
                throw std::logic_error("standard split produced a non-LS prefix");
            return {prefix, suffix};
        }
    }
    throw std::logic_error("no LS suffix found; input was not an LS word");
}

static Term letter_term(const DWord& l) {
    Term t = Term::var(l.var);
    for (int i = 0; i < l.s; ++i) t = Term::der(t);
    return t;
}

Term canonical_bracketing(const Word& w, int lie_op) {
    if (!is_ls_word(w)) throw std::invalid_argument("not a Lyndon-Shirshov word");
    if (w.size() == 1) return letter_term(w[0]);
    auto [l, r] = standard_split(w);
    return Term::app(lie_op, canonical_bracketing(l, lie_op), canonical_bracketing(r, lie_op));
}

namespace {

AssocPoly concat(const AssocPoly& a, const AssocPoly& b) {
    AssocPoly out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(std::move(w), ca * cb);
        }
    return out;
}

AssocPoly commutator(const AssocPoly& a, const AssocPoly& b) {
    AssocPoly out = concat(a, b);
    out -= concat(b, a);
    return out;
}

AssocPoly expand_rec(const Word& w) {
    if (w.size() == 1) return AssocPoly::monomial(w);
    auto [l, r] = standard_split(w);
    return commutator(expand_rec(l), expand_rec(r));
}

} // namespace

AssocPoly bracketing_expansion(const Word& w) {
    if (!is_ls_word(w)) throw std::invalid_argument("not a Lyndon-Shirshov word");
    return expand_rec(w);
}

LiePoly lie_normal_form_assoc(AssocPoly p) {
    LiePoly out;
    while (!p.is_zero()) {
        // Greatest associative word present.
        const auto& [w, c] = *p.terms().rbegin();
        if (!is_ls_word(w))
            throw std::logic_error("leading word is not LS; input is not a Lie element");
        Word key = w;
        Rational coef = c;
        out.add(key, coef);
        AssocPoly expansion = bracketing_expansion(key);
        expansion *= coef;
        p -= expansion;
    }
    return out;
}

LiePoly lie_normal_form(const Polynomial& p, const Signature& sig) {
    int lie_op = sig.op_index("lie");
    std::function<AssocPoly(const Term&)> expand = [&](const Term& t) -> AssocPoly {
        switch (t.kind()) {
            case Term::Kind::Var:
                return AssocPoly::monomial(Word{DWord{0, t.var_index()}});
            case Term::Kind::Der: {
                AssocPoly inner = expand(t.child());
                AssocPoly out;
                for (const auto& [w, c] : inner.terms())
                    for (std::size_t i = 0; i < w.size(); ++i) {
                        Word v = w;
                        v[i].s += 1;
                        out.add(std::move(v), c);
                    }
                return out;
            }
            case Term::Kind::App: {
                if (t.op() != lie_op)
                    throw std::invalid_argument("lie_normal_form: term contains a non-bracket operation");
                return commutator(expand(t.left()), expand(t.right()));
            }
        }
        throw std::logic_error("unreachable");
    };
    AssocPoly acc;
    for (const auto& [t, c] : p.terms()) {
        AssocPoly q = expand(t);
        q *= c;
        acc += q;
    }
    return lie_normal_form_assoc(std::move(acc));
}

LiePoly lie_bracket(const Word& a, const Word& b) {
    return lie_normal_form_assoc(commutator(bracketing_expansion(a), bracketing_expansion(b)));
}

LiePoly lie_bracket(const LiePoly& a, const LiePoly& b) {
    AssocPoly acc;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            AssocPoly c = commutator(bracketing_expansion(wa), bracketing_expansion(wb));
            c *= ca * cb;
            acc += c;
        }
    return lie_normal_form_assoc(std::move(acc));
}

LiePoly lie_derive(const Word& w) {
    AssocPoly acc;
    AssocPoly expansion = bracketing_expansion(w);
    for (const auto& [u, c] : expansion.terms()) {
        for (std::size_t i = 0; i < u.size(); ++i) {
            Word v = u;
            v[i].s += 1;
            acc.add(std::move(v), c);
        }
    }
    return lie_normal_form_assoc(std::move(acc));
}

std::vector<Word> ls_words_on(const std::vector<DWord>& letters) {
    Word sorted = letters;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Word> out;
    do {
        if (is_ls_word(sorted)) out.push_back(sorted);
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return out;
}

} // namespace gdop
