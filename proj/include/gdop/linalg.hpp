/*
 * linalg.hpp
 * ----------
 * Exact rational row spaces in reduced row echelon form. Rows are inserted
 * one at a time and kept fully reduced, so residuals are canonical quotient
 * coordinates and span comparison can be done by mutual membership.
 * Insertion can track, per pivot row, its expression as a combination of the
 * originally inserted vectors; that bookkeeping yields membership
 * certificates and kernel vectors.
 */
#pragma once

#include "gdop/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace gdop {

using Vec = std::vector<Rational>;

class RowSpace {
public:
    RowSpace() = default;
    explicit RowSpace(std::size_t ncols, bool track_combinations = false)
        : ncols_(ncols), track_(track_combinations) {}

    std::size_t ncols() const { return ncols_; }
    std::size_t dim() const { return rows_.size(); }

    struct Reduction {
        Vec residual;
        std::map<std::size_t, Rational> combination; // over original insert ids
        bool in_span = false;
    };

    // Reduce v against the current space. combination satisfies
    // v = residual + sum c_id * original_row(id) when tracking is on.
    Reduction reduce(const Vec& v) const;

    // Insert v (tagged with the next original id); returns true if the rank
    // grew. No-ops for rows already in the span.
    bool insert(const Vec& v);

    std::size_t inserted_count() const { return n_inserted_; }

    bool contains(const Vec& v) const;

    // Pivot rows in RREF (each starts with 1 at its pivot column, zeros at
    // the other pivots).
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

    // Expression of pivot row r over original insert ids (tracking only).
    const std::map<std::size_t, Rational>& row_combination(std::size_t r) const {
        return combos_.at(r);
    }

    // A basis of the orthogonal complement of the row space (nullspace of
    // the matrix, as dot-product functionals).
    std::vector<Vec> nullspace() const;

    // For a fully reduced residual r != 0, the nullspace functional
    // supported on r's first nonzero (free) column; f . row = 0 for all rows
    // and f . r = r[free_col] != 0.
    Vec separating_functional(const Vec& reduced_residual) const;

private:
    std::size_t ncols_ = 0;
    bool track_ = false;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
    std::map<std::size_t, std::size_t> pivot_of_col_;
    std::vector<std::map<std::size_t, Rational>> combos_;
    std::size_t n_inserted_ = 0;
};

inline Rational dot(const Vec& a, const Vec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

inline bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

// Mutual membership of row spans.
bool span_equal(const RowSpace& a, const RowSpace& b);

} // namespace gdop
