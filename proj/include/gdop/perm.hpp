/*
 * perm.hpp
 * --------
 * Permutations of {1..n}, 1-based. Composition convention, fixed once for
 * the whole library: (a * b)(i) = a(b(i)), i.e. b acts first. The action on
 * multilinear polynomials relabels x_i -> x_{p(i)} and satisfies
 * act(act(f, s), t) = act(f, t * s).
 */
#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace gdop {

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
                throw std::invalid_argument("not a permutation");
            seen[v - 1] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    static Permutation transposition(int n, int i, int j) {
        Permutation p = identity(n);
        std::swap(p.img_[i - 1], p.img_[j - 1]);
        return p;
    }

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_.at(static_cast<std::size_t>(i - 1)); }

    Permutation operator*(const Permutation& b) const {
        if (n() != b.n()) throw std::invalid_argument("size mismatch");
        std::vector<int> v(img_.size());
        for (int i = 1; i <= n(); ++i) v[i - 1] = (*this)(b(i));
        return Permutation(std::move(v));
    }

    Permutation inverse() const {
        std::vector<int> v(img_.size());
        for (int i = 1; i <= n(); ++i) v[(*this)(i)-1] = i;
        return Permutation(std::move(v));
    }

    int sign() const {
        int s = 1;
        std::vector<bool> seen(img_.size(), false);
        for (int i = 1; i <= n(); ++i) {
            if (seen[i - 1]) continue;
            int len = 0;
            for (int j = i; !seen[j - 1]; j = (*this)(j)) {
                seen[j - 1] = true;
                ++len;
            }
            if (len % 2 == 0) s = -s;
        }
        return s;
    }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

std::vector<Permutation> symmetric_group(int n);

} // namespace gdop
