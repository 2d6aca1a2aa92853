#pragma once

// Dense exact linear algebra on Eigen matrices of Rational scalars.
// Everything here is plain Gauss-Jordan over Q; with GMP rationals the
// arithmetic is exact and entries stay reduced, so the echelon forms are
// canonical and reusable as ideal representations.

#include "hodge/rational.hpp"

#include <Eigen/Dense>

#include <vector>

namespace hodge {

using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RowVec = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;
using Index = Eigen::Index;

// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<Index> reduced_row_echelon(Mat& m);

Index rank(Mat m);

// Rows form the canonical (RREF) basis of the right null space of m.
Mat nullspace(const Mat& m);

Rational determinant(Mat m);

// Incrementally maintained reduced row echelon span. Rows are inserted one
// at a time and kept fully reduced, so membership tests are a single sweep.
class RowSpan {
public:
    explicit RowSpan(Index cols) : cols_(cols) {}

    // Returns true if the row enlarged the span.
    bool insert(RowVec row);

    bool contains(RowVec row) const;

    // Reduces the row against the span in place and returns it.
    RowVec reduce(RowVec row) const;

    Index dim() const { return static_cast<Index>(rows_.size()); }
    Index cols() const { return cols_; }

    // Rows sorted by pivot column; this is the canonical RREF matrix.
    Mat to_matrix() const;

    const std::vector<Index>& pivots() const { return pivot_cols_; }

private:
    Index cols_;
    std::vector<RowVec> rows_;        // kept normalized, mutually reduced
    std::vector<Index> pivot_cols_;   // pivot_cols_[i] is the pivot of rows_[i]
};

}  // namespace hodge
