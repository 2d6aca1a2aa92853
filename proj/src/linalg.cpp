#include "hodge/linalg.hpp"

#include <algorithm>

namespace hodge {

std::vector<Index> reduced_row_echelon(Mat& m) {
    std::vector<Index> pivots;
    const Index rows = m.rows(), cols = m.cols();
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index p = -1;
        for (Index i = r; i < rows; ++i) {
            if (!m(i, c).is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r) m.row(p).swap(m.row(r));
        const Rational inv = Rational(1) / m(r, c);
        for (Index j = c; j < cols; ++j) m(r, j) *= inv;
        for (Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rational f = m(i, c);
            for (Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

Index rank(Mat m) { return static_cast<Index>(reduced_row_echelon(m).size()); }

Mat nullspace(const Mat& m) {
    Mat r = m;
    const std::vector<Index> pivots = reduced_row_echelon(r);
    const Index cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (Index c : pivots) is_pivot[c] = true;

    std::vector<Index> free_cols;
    for (Index c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Mat basis(static_cast<Index>(free_cols.size()), cols);
    basis.setConstant(Rational(0));
    for (Index k = 0; k < basis.rows(); ++k) {
        const Index fc = free_cols[static_cast<size_t>(k)];
        basis(k, fc) = Rational(1);
        for (size_t i = 0; i < pivots.size(); ++i)
            basis(k, pivots[i]) = -r(static_cast<Index>(i), fc);
    }
    // Rows are already mutually reduced on the free columns; normalize to a
    // canonical RREF so span equality is matrix equality.
    reduced_row_echelon(basis);
    return basis;
}

Rational determinant(Mat m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const Index n = m.rows();
    Rational det(1);
    for (Index c = 0; c < n; ++c) {
        Index p = -1;
        for (Index i = c; i < n; ++i) {
            if (!m(i, c).is_zero()) {
                p = i;
                break;
            }
        }
        if (p < 0) return Rational(0);
        if (p != c) {
            m.row(p).swap(m.row(c));
            det = -det;
        }
        det *= m(c, c);
        const Rational inv = Rational(1) / m(c, c);
        for (Index i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            const Rational f = m(i, c) * inv;
            for (Index j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

RowVec RowSpan::reduce(RowVec row) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Index c = pivot_cols_[i];
        if (row(c).is_zero()) continue;
        const Rational f = row(c);
        row -= f * rows_[i];
    }
    return row;
}

bool RowSpan::contains(RowVec row) const {
    row = reduce(std::move(row));
    for (Index j = 0; j < cols_; ++j)
        if (!row(j).is_zero()) return false;
    return true;
}

bool RowSpan::insert(RowVec row) {
    row = reduce(std::move(row));
    Index pivot = -1;
    for (Index j = 0; j < cols_; ++j) {
        if (!row(j).is_zero()) {
            pivot = j;
            break;
        }
    }
    if (pivot < 0) return false;
    const Rational inv = Rational(1) / row(pivot);
    for (Index j = pivot; j < cols_; ++j) row(j) *= inv;
    // Keep existing rows reduced against the new pivot.
    for (auto& r : rows_) {
        if (r(pivot).is_zero()) continue;
        const Rational f = r(pivot);
        r -= f * row;
    }
    auto it = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), pivot);
    const size_t pos = static_cast<size_t>(it - pivot_cols_.begin());
    pivot_cols_.insert(it, pivot);
    rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(row));
    return true;
}

Mat RowSpan::to_matrix() const {
    Mat m(dim(), cols_);
    for (Index i = 0; i < dim(); ++i) m.row(i) = rows_[static_cast<size_t>(i)];
    return m;
}

}  // namespace hodge
