/*
 * term.hpp
 * --------
 * Terms are finite rooted planar trees: variable leaves xN, unary derivation
 * nodes (d t), and binary operation nodes (op t1 t2). Immutable, shared
 * structurally, value semantics.
 *
 * The canonical total order on terms is:
 *   1. higher degree (leaf count) first,
 *   2. node kind: leaf < d < op,
 *   3. leaves by variable index, d by child, ops by op index then children
 *      left-to-right.
 * Under this order the canonical key of a symmetric or antisymmetric node
 * keeps its two subtrees sorted ascending (with a sign flip when an
 * antisymmetric swap was needed), so e.g. (lie (circ x1 x2) x3) and
 * (lie x1 x2) are canonical as written.
 *
 * Variable indices are positive in user-facing terms; indices <= 0 are
 * reserved for fresh internal variables, which sort below every user
 * variable.
 */
#pragma once

#include "gdop/signature.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

namespace gdop {

struct Variable {
    int index = 1;
    bool operator==(const Variable&) const = default;
    auto operator<=>(const Variable&) const = default;
};

class Term {
public:
    enum class Kind { Var, Der, App };

    static Term var(int index) {
        return Term(std::make_shared<const Node>(Node{Kind::Var, index, -1, nullptr, nullptr, 1, 0}));
    }
    static Term var(Variable v) { return var(v.index); }

    static Term der(Term t) {
        auto n = std::make_shared<const Node>(
            Node{Kind::Der, 0, -1, t.node_, nullptr, t.degree(), t.d_degree() + 1});
        return Term(std::move(n));
    }

    static Term app(int op, Term l, Term r) {
        auto n = std::make_shared<const Node>(Node{Kind::App, 0, op, l.node_, r.node_,
                                                   l.degree() + r.degree(),
                                                   l.d_degree() + r.d_degree()});
        return Term(std::move(n));
    }

    Kind kind() const { return node_->kind; }
    int var_index() const { return node_->var; }
    int op() const { return node_->op; }
    Term child() const { return Term(node_->left); }
    Term left() const { return Term(node_->left); }
    Term right() const { return Term(node_->right); }
    int degree() const { return node_->degree; }
    int d_degree() const { return node_->d_degree; }

private:
    struct Node {
        Kind kind;
        int var;  // Kind::Var
        int op;   // Kind::App
        std::shared_ptr<const Node> left;   // Der child / App left
        std::shared_ptr<const Node> right;  // App right
        int degree;
        int d_degree;
    };

    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;

    friend int compare(const Term& a, const Term& b);
};

int compare(const Term& a, const Term& b);

inline bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }
inline bool operator==(const Term& a, const Term& b) { return compare(a, b) == 0; }
inline bool operator!=(const Term& a, const Term& b) { return compare(a, b) != 0; }

struct TermLess {
    bool operator()(const Term& a, const Term& b) const { return compare(a, b) < 0; }
};

// Canonical representative of t under the signature's symmetry flags,
// together with the sign picked up by antisymmetric swaps. sign 0 means the
// monomial vanishes (an antisymmetric node with equal arguments).
std::pair<Term, int> canonicalize(const Term& t, const Signature& sig);

std::string print_term(const Term& t, const Signature& sig);

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

Term parse_term(const std::string& text, const Signature& sig);

} // namespace gdop
