/*
 * signature.hpp
 * -------------
 * A signature lists the named binary operations of an algebra, each with a
 * symmetry flag, plus an optional unary derivation symbol d. The symmetry
 * flag is honoured by term canonicalization: a symmetric operation's two
 * argument orders name the same monomial, an antisymmetric operation's swap
 * negates it.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gdop {

enum class Symmetry { None, Symmetric, Antisymmetric };

inline const char* to_string(Symmetry s) {
    switch (s) {
        case Symmetry::None: return "none";
        case Symmetry::Symmetric: return "symmetric";
        case Symmetry::Antisymmetric: return "antisymmetric";
    }
    return "?";
}

inline Symmetry symmetry_from_string(const std::string& s) {
    if (s == "none") return Symmetry::None;
    if (s == "symmetric") return Symmetry::Symmetric;
    if (s == "antisymmetric") return Symmetry::Antisymmetric;
    throw std::invalid_argument("unknown symmetry: " + s);
}

struct OpDef {
    std::string name;
    Symmetry sym = Symmetry::None;
};

class Signature {
public:
    Signature() = default;
    Signature(std::vector<OpDef> ops, bool has_derivation)
        : ops_(std::move(ops)), has_derivation_(has_derivation) {
        for (std::size_t i = 0; i < ops_.size(); ++i)
            for (std::size_t j = i + 1; j < ops_.size(); ++j)
                if (ops_[i].name == ops_[j].name)
                    throw std::invalid_argument("duplicate operation name: " + ops_[i].name);
    }

    int arity() const { return 2; } // all named operations are binary
    std::size_t op_count() const { return ops_.size(); }
    const OpDef& op(int i) const { return ops_.at(static_cast<std::size_t>(i)); }
    bool has_derivation() const { return has_derivation_; }

    int op_index(const std::string& name) const {
        for (std::size_t i = 0; i < ops_.size(); ++i)
            if (ops_[i].name == name) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const Signature& o) const = default;

private:
    std::vector<OpDef> ops_;
    bool has_derivation_ = false;
};

} // namespace gdop
