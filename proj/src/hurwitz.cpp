#include "gdop/hurwitz.hpp"

#include "gdop/expansion.hpp"
#include "gdop/lincomb.hpp"

#include <functional>
#include <utility>

namespace gdop {

namespace {

// A-monomials are magmatic trees with d-chain leaves, truncated at d^N = 0.
using APoly = Polynomial;

struct HKeyLess {
    bool operator()(const std::pair<Term, int>& a, const std::pair<Term, int>& b) const {
        if (a.second != b.second) return a.second < b.second;
        return compare(a.first, b.first) < 0;
    }
};
using HatPoly = LinComb<std::pair<Term, int>, HKeyLess>;

int leaf_depth(const Term& t) {
    int s = 0;
    Term u = t;
    while (u.kind() == Term::Kind::Der) {
        ++s;
        u = u.child();
    }
    return s;
}

APoly a_mul(const APoly& a, const APoly& b, const Signature& sig) {
    APoly out;
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms()) out += term_poly(Term::app(0, ta, tb), sig, ca * cb);
    return out;
}

// Leibniz derivative with d^N = 0 on the leaves.
APoly a_der(const APoly& a, int N, const Signature& sig) {
    std::function<APoly(const Term&)> der = [&](const Term& t) -> APoly {
        switch (t.kind()) {
            case Term::Kind::Var:
            case Term::Kind::Der: {
                if (leaf_depth(t) + 1 >= N) return APoly{}; // d^N(x) = 0
                return term_poly(Term::der(t), sig);
            }
            case Term::Kind::App: {
                APoly out;
                APoly dl = der(t.left());
                for (const auto& [l, c] : dl.terms())
                    out += term_poly(Term::app(t.op(), l, t.right()), sig, c);
                APoly dr = der(t.right());
                for (const auto& [r, c] : dr.terms())
                    out += term_poly(Term::app(t.op(), t.left(), r), sig, c);
                return out;
            }
        }
        throw std::logic_error("unreachable");
    };
    APoly out;
    for (const auto& [t, c] : a.terms()) {
        APoly q = der(t);
        q *= c;
        out += q;
    }
    return out;
}

HatPoly phi(const APoly& a, int N, const Signature& sig) {
    HatPoly out;
    APoly cur = a;
    // The sum is finite: d^N = 0 on the generators of A kills every monomial
    // after at most (degree * (N-1)) derivations.
    for (int s = 0; !cur.is_zero(); ++s) {
        if (s > 1000) throw std::logic_error("Phi series did not terminate");
        for (const auto& [t, c] : cur.terms()) out.add({t, s}, c);
        cur = a_der(cur, N, sig);
    }
    return out;
}

// The hat-algebra products: A-parts always multiply in order, H-parts per
// the componentwise rules. Indices are not cut off: every index reachable
// from the d^N = 0 side of A is kept, so Phi is compared exactly
// (truncating the intermediate Hurwitz indices would silently drop products
// that a later star brings back into range).
enum class HatOp { Prod, Succ, Prec };

HatPoly hat_op(const HatPoly& a, const HatPoly& b, const Signature& sig, HatOp op) {
    HatPoly out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            int n = ka.second, m = kb.second;
            int idx;
            Rational coef;
            switch (op) {
                case HatOp::Prod: // f * g
                    idx = n + m;
                    coef = Rational(binomial(static_cast<unsigned long>(n + m),
                                             static_cast<unsigned long>(m)));
                    break;
                case HatOp::Succ: // f star g, zero when f = x^(0)
                    if (n == 0) continue;
                    idx = n + m - 1;
                    coef = Rational(binomial(static_cast<unsigned long>(n + m - 1),
                                             static_cast<unsigned long>(m)));
                    break;
                case HatOp::Prec: // g star f, zero when g = x^(0)
                    if (m == 0) continue;
                    idx = n + m - 1;
                    coef = Rational(binomial(static_cast<unsigned long>(n + m - 1),
                                             static_cast<unsigned long>(n)));
                    break;
            }
            APoly prod = a_mul(term_poly(ka.first, sig), term_poly(kb.first, sig), sig);
            for (const auto& [t, c] : prod.terms()) out.add({t, idx}, ca * cb * coef * c);
        }
    return out;
}

} // namespace

HurwitzVerdict hurwitz_phi_check(const Term& t, const Signature& src, int N) {
    const Signature& A = magder_signature();
    int prec = src.op_index("prec"), succ = src.op_index("succ"), mul = src.op_index("mul");

    // Count derivation-introducing nodes for the truncation precondition.
    std::function<int(const Term&)> dcount = [&](const Term& u) -> int {
        switch (u.kind()) {
            case Term::Kind::Var: return 0;
            case Term::Kind::Der: return 1 + dcount(u.child());
            case Term::Kind::App: {
                int inner = dcount(u.left()) + dcount(u.right());
                return inner + ((u.op() == prec || u.op() == succ) ? 1 : 0);
            }
        }
        throw std::logic_error("unreachable");
    };
    if (N < dcount(t) + 1)
        throw std::invalid_argument("truncation too small: need N >= " +
                                    std::to_string(dcount(t) + 1));

    // Left side: evaluate in A, then apply Phi.
    std::function<APoly(const Term&)> evalA = [&](const Term& u) -> APoly {
        switch (u.kind()) {
            case Term::Kind::Var:
                return term_poly(Term::var(u.var_index()), A);
            case Term::Kind::Der:
                return a_der(evalA(u.child()), N, A);
            case Term::Kind::App: {
                APoly l = evalA(u.left()), r = evalA(u.right());
                if (u.op() == prec) return a_mul(l, a_der(r, N, A), A);
                if (u.op() == succ) return a_mul(a_der(l, N, A), r, A);
                if (u.op() == mul) return a_mul(l, r, A);
                throw std::invalid_argument("term contains an operation outside {prec,succ,mul}");
            }
        }
        throw std::logic_error("unreachable");
    };
    HatPoly lhs = phi(evalA(t), N, A);

    // Right side: evaluate on Phi-images with the componentwise products.
    std::function<HatPoly(const Term&)> evalHat = [&](const Term& u) -> HatPoly {
        switch (u.kind()) {
            case Term::Kind::Var:
                return phi(term_poly(Term::var(u.var_index()), A), N, A);
            case Term::Kind::Der:
                throw std::invalid_argument("d is not an operation of the hat algebra");
            case Term::Kind::App: {
                HatPoly l = evalHat(u.left()), r = evalHat(u.right());
                if (u.op() == succ) return hat_op(l, r, A, HatOp::Succ);
                if (u.op() == prec) return hat_op(l, r, A, HatOp::Prec);
                if (u.op() == mul) return hat_op(l, r, A, HatOp::Prod);
                throw std::invalid_argument("term contains an operation outside {prec,succ,mul}");
            }
        }
        throw std::logic_error("unreachable");
    };
    HatPoly rhs = evalHat(t);

    HurwitzVerdict v;
    HatPoly diff = lhs;
    diff -= rhs;
    v.holds = diff.is_zero();
    if (!v.holds) {
        const auto& [key, c] = *diff.terms().begin();
        v.mismatch = to_string(c) + " * " + print_term(key.first, A) + " (x) x^(" +
                     std::to_string(key.second) + ")";
    }
    return v;
}

} // namespace gdop
