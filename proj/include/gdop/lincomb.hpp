/*
 * lincomb.hpp
 * -----------
 * Formal linear combination of keys with exact rational coefficients.
 * Zero coefficients are never stored, so equality is key-wise map equality.
 * Every normal-form algebra in the library (free Poisson-differential,
 * commutative-differential, BiCom, ...) stores its elements in one of these,
 * keyed by its own canonical monomial type.
 */
#pragma once

#include "gdop/rational.hpp"

#include <map>
#include <utility>

namespace gdop {

template <class Key, class Less = std::less<Key>>
class LinComb {
public:
    using map_type = std::map<Key, Rational, Less>;

    LinComb() = default;

    static LinComb monomial(Key k, Rational c = Rational(1)) {
        LinComb p;
        p.add(std::move(k), std::move(c));
        return p;
    }

    void add(Key k, Rational c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(std::move(k), c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    LinComb& operator*=(const Rational& s) {
        if (s == 0) { terms_.clear(); return *this; }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { a += b; return a; }
    friend LinComb operator-(LinComb a, const LinComb& b) { a -= b; return a; }
    friend LinComb operator*(const Rational& s, LinComb a) { a *= s; return a; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const map_type& terms() const { return terms_; }

    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
    bool operator!=(const LinComb& o) const { return !(*this == o); }

private:
    map_type terms_;
};

} // namespace gdop
