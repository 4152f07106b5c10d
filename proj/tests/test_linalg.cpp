#include "gdop/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace gdop;

namespace {
Vec vec(std::initializer_list<long> xs) {
    Vec v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}
} // namespace

TEST_CASE("row space rank and membership") {
    RowSpace s(3);
    CHECK(s.insert(vec({1, 2, 3})));
    CHECK(s.insert(vec({0, 1, 1})));
    CHECK_FALSE(s.insert(vec({1, 3, 4}))); // sum of the first two
    CHECK(s.dim() == 2);
    CHECK(s.contains(vec({2, 5, 7})));
    CHECK_FALSE(s.contains(vec({0, 0, 1})));
}

TEST_CASE("combination tracking reconstructs inserted rows") {
    RowSpace s(4, true);
    std::vector<Vec> rows = {vec({1, 1, 0, 0}), vec({0, 2, 1, 0}), vec({0, 0, 3, -1})};
    for (const auto& r : rows) s.insert(r);
    Vec target = vec({2, 4, 7, -2}); // 2*r0 + 1*r1 + ... solve
    auto red = s.reduce(target);
    if (red.in_span) {
        Vec sum(4, Rational(0));
        for (const auto& [id, c] : red.combination)
            for (std::size_t j = 0; j < 4; ++j) sum[j] += c * rows[id][j];
        CHECK(sum == target);
    }
    // a row in span: exact reconstruction
    auto red2 = s.reduce(vec({1, 3, 1, 0}));
    REQUIRE(red2.in_span);
    Vec sum(4, Rational(0));
    for (const auto& [id, c] : red2.combination)
        for (std::size_t j = 0; j < 4; ++j) sum[j] += c * rows[id][j];
    CHECK(sum == vec({1, 3, 1, 0}));
}

TEST_CASE("nullspace is orthogonal to the row space") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t ncols = 6;
        RowSpace s(ncols);
        std::vector<Vec> original;
        for (int r = 0; r < 4; ++r) {
            Vec v(ncols);
            for (auto& x : v) x = Rational(static_cast<long>(rng() % 5) - 2);
            original.push_back(v);
            s.insert(v);
        }
        for (const auto& f : s.nullspace())
            for (const auto& row : original) CHECK(dot(f, row) == 0);
        CHECK(s.dim() + s.nullspace().size() == ncols);
    }
}

TEST_CASE("separating functional splits a non-member from the span") {
    RowSpace s(3);
    s.insert(vec({1, 0, 1}));
    Vec outside = vec({0, 1, 5});
    auto red = s.reduce(outside);
    REQUIRE_FALSE(red.in_span);
    Vec f = s.separating_functional(red.residual);
    CHECK(dot(f, vec({1, 0, 1})) == 0);
    CHECK(dot(f, outside) != 0);
}

TEST_CASE("span equality by mutual membership") {
    RowSpace a(3), b(3), c(3);
    a.insert(vec({1, 0, 0}));
    a.insert(vec({0, 1, 0}));
    b.insert(vec({1, 1, 0}));
    b.insert(vec({1, -1, 0}));
    c.insert(vec({1, 0, 0}));
    c.insert(vec({0, 0, 1}));
    CHECK(span_equal(a, b));
    CHECK_FALSE(span_equal(a, c));
}
