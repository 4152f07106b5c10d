#include "gdop/linalg.hpp"

#include <stdexcept>

namespace gdop {

RowSpace::Reduction RowSpace::reduce(const Vec& v) const {
    if (v.size() != ncols_) throw std::invalid_argument("column count mismatch");
    Reduction red;
    red.residual = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = red.residual[pivots_[r]];
        if (c == 0) continue;
        Rational f = c; // pivot entries are 1
        const Vec& row = rows_[r];
        for (std::size_t j = 0; j < ncols_; ++j)
            if (row[j] != 0) red.residual[j] -= f * row[j];
        if (track_) {
            for (const auto& [id, w] : combos_[r]) {
                auto [it, fresh] = red.combination.emplace(id, f * w);
                if (!fresh) {
                    it->second += f * w;
                    if (it->second == 0) red.combination.erase(it);
                }
            }
        }
    }
    red.in_span = is_zero_vec(red.residual);
    return red;
}

bool RowSpace::insert(const Vec& v) {
    Reduction red = reduce(v);
    std::size_t id = n_inserted_++;
    if (red.in_span) return false;

    // Normalize the new pivot to 1.
    std::size_t p = 0;
    while (red.residual[p] == 0) ++p;
    Rational lead = red.residual[p];
    for (auto& x : red.residual) x /= lead;

    std::map<std::size_t, Rational> combo;
    if (track_) {
        // v = residual + sum c*orig  =>  residual = v - sum c*orig.
        combo[id] = Rational(1) / lead;
        for (const auto& [oid, w] : red.combination) {
            Rational nw = -w / lead;
            if (nw != 0) combo[oid] = nw;
        }
    }

    // Eliminate the new pivot column from existing rows to stay in RREF.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Rational f = rows_[r][p];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ncols_; ++j)
            if (red.residual[j] != 0) rows_[r][j] -= f * red.residual[j];
        if (track_) {
            for (const auto& [oid, w] : combo) {
                auto [it, fresh] = combos_[r].emplace(oid, -f * w);
                if (!fresh) {
                    it->second += -f * w;
                    if (it->second == 0) combos_[r].erase(it);
                }
            }
        }
    }

    pivot_of_col_[p] = rows_.size();
    rows_.push_back(std::move(red.residual));
    pivots_.push_back(p);
    if (track_) combos_.push_back(std::move(combo));
    return true;
}

bool RowSpace::contains(const Vec& v) const { return reduce(v).in_span; }

std::vector<Vec> RowSpace::nullspace() const {
    std::vector<bool> is_pivot(ncols_, false);
    for (std::size_t p : pivots_) is_pivot[p] = true;
    std::vector<Vec> out;
    for (std::size_t j = 0; j < ncols_; ++j) {
        if (is_pivot[j]) continue;
        Vec f(ncols_, Rational(0));
        f[j] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r) f[pivots_[r]] = -rows_[r][j];
        out.push_back(std::move(f));
    }
    return out;
}

Vec RowSpace::separating_functional(const Vec& reduced_residual) const {
    for (std::size_t j = 0; j < ncols_; ++j) {
        if (reduced_residual[j] == 0) continue;
        if (pivot_of_col_.count(j))
            throw std::logic_error("residual is not fully reduced");
        Vec f(ncols_, Rational(0));
        f[j] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r) f[pivots_[r]] = -rows_[r][j];
        return f;
    }
    throw std::invalid_argument("residual is zero; no separating functional");
}

bool span_equal(const RowSpace& a, const RowSpace& b) {
    if (a.dim() != b.dim()) return false;
    for (const auto& row : a.rows())
        if (!b.contains(row)) return false;
    for (const auto& row : b.rows())
        if (!a.contains(row)) return false;
    return true;
}

} // namespace gdop
