#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodge/linalg.hpp"

using namespace hodge;

namespace {

Mat make(std::initializer_list<std::initializer_list<long>> rows) {
    const Index r = static_cast<Index>(rows.size());
    const Index c = static_cast<Index>(rows.begin()->size());
    Mat m(r, c);
    Index i = 0;
    for (const auto& row : rows) {
        Index j = 0;
        for (long v : row) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("rref produces canonical form and pivots") {
    Mat m = make({{2, 4, 6}, {1, 2, 4}});
    const auto pivots = reduced_row_echelon(m);
    REQUIRE(pivots.size() == 2);
    CHECK(pivots[0] == 0);
    CHECK(pivots[1] == 2);
    CHECK(m(0, 0) == Rational(1));
    CHECK(m(0, 1) == Rational(2));
    CHECK(m(0, 2) == Rational(0));
    CHECK(m(1, 2) == Rational(1));
}

TEST_CASE("rank") {
    CHECK(rank(make({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(make({{1, 0}, {0, 1}})) == 2);
    CHECK(rank(make({{0, 0}, {0, 0}})) == 0);
}

TEST_CASE("determinant exact") {
    CHECK(determinant(make({{1, 2}, {3, 4}})) == Rational(-2));
    CHECK(determinant(make({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})) == Rational(30));
    CHECK(determinant(make({{1, 2}, {2, 4}})) == Rational(0));
    // Hilbert-like fractions stay exact.
    Mat h(2, 2);
    h(0, 0) = Rational(1);
    h(0, 1) = Rational(1, 2);
    h(1, 0) = Rational(1, 2);
    h(1, 1) = Rational(1, 3);
    CHECK(determinant(h) == Rational(1, 12));
}

TEST_CASE("nullspace is the canonical kernel basis") {
    Mat m = make({{1, 2, 3}});
    Mat ns = nullspace(m);
    REQUIRE(ns.rows() == 2);
    for (Index i = 0; i < ns.rows(); ++i) {
        Rational dot(0);
        for (Index j = 0; j < 3; ++j) dot += m(0, j) * ns(i, j);
        CHECK(dot == Rational(0));
    }
    // Full-rank square matrix: trivial kernel.
    CHECK(nullspace(make({{1, 0}, {0, 1}})).rows() == 0);
}

TEST_CASE("row span insertion and membership") {
    RowSpan span(3);
    RowVec a(3), b(3), c(3);
    a << Rational(1), Rational(2), Rational(3);
    b << Rational(2), Rational(4), Rational(6);
    c << Rational(0), Rational(1), Rational(0);
    CHECK(span.insert(a));
    CHECK_FALSE(span.insert(b));  // dependent
    CHECK(span.insert(c));
    CHECK(span.dim() == 2);
    RowVec combo = a + Rational(5) * c;
    CHECK(span.contains(combo));
    RowVec outside(3);
    outside << Rational(0), Rational(0), Rational(1);
    CHECK_FALSE(span.contains(outside));

    // Canonical matrix matches the batch RREF of the same rows.
    Mat batch(2, 3);
    batch.row(0) = a;
    batch.row(1) = c;
    reduced_row_echelon(batch);
    const Mat canon = span.to_matrix();
    REQUIRE(canon.rows() == batch.rows());
    for (Index i = 0; i < canon.rows(); ++i)
        for (Index j = 0; j < canon.cols(); ++j) CHECK(canon(i, j) == batch(i, j));
}
