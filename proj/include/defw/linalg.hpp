#pragma once

#include "defw/rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace defw {

// Incrementally maintained reduced row echelon form over an exact field.
template <typename Scalar>
class RowEchelon {
public:
    explicit RowEchelon(Eigen::Index cols = 0) : cols_(cols) {}

    Eigen::Index cols() const { return cols_; }
    Eigen::Index rank() const { return static_cast<Eigen::Index>(rows_.size()); }
    bool full() const { return rank() == cols_; }
    const std::vector<Eigen::Index>& pivots() const { return pivots_; }
    const Vec<Scalar>& row(Eigen::Index i) const { return rows_[i]; }

    // eliminate every pivot column from v
    void reduce(Vec<Scalar>& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Scalar f = v[pivots_[i]];
            if (f == 0) continue;
            for (Eigen::Index j : support_[i]) v[j] -= f * rows_[i][j];
        }
    }

    Vec<Scalar> reduced(Vec<Scalar> v) const {
        reduce(v);
        return v;
    }

    bool contains(const Vec<Scalar>& v) const { return reduced(v).isZero(); }

    bool insert(Vec<Scalar> v) {
        if (v.size() != cols_) throw std::invalid_argument("RowEchelon: width mismatch");
        reduce(v);
        Eigen::Index p = 0;
        while (p < cols_ && v[p] == 0) ++p;
        if (p == cols_) return false;
        const Scalar lead = v[p];
        v /= lead;
        auto sup = support_of(v);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Scalar f = rows_[i][p];
            if (f == 0) continue;
            for (Eigen::Index j : sup) rows_[i][j] -= f * v[j];
            support_[i] = support_of(rows_[i]);
        }
        auto at = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
        pivots_.insert(pivots_.begin() + at, p);
        rows_.insert(rows_.begin() + at, std::move(v));
        support_.insert(support_.begin() + at, std::move(sup));
        return true;
    }

    // coordinates against the echelon rows, if v lies in their span
    std::optional<Vec<Scalar>> coordinates(const Vec<Scalar>& v) const {
        Vec<Scalar> c(rank());
        for (Eigen::Index i = 0; i < rank(); ++i) c[i] = v[pivots_[i]];
        if (!contains(v)) return std::nullopt;
        return c;
    }

    Mat<Scalar> matrix() const {
        Mat<Scalar> m = Mat<Scalar>::Zero(rank(), cols_);
        for (Eigen::Index i = 0; i < rank(); ++i) m.row(i) = rows_[i].transpose();
        return m;
    }

    std::vector<Eigen::Index> free_columns() const {
        std::vector<Eigen::Index> out;
        std::size_t k = 0;
        for (Eigen::Index j = 0; j < cols_; ++j) {
            if (k < pivots_.size() && pivots_[k] == j) {
                ++k;
                continue;
            }
            out.push_back(j);
        }
        return out;
    }

private:
    static std::vector<Eigen::Index> support_of(const Vec<Scalar>& v) {
        std::vector<Eigen::Index> s;
        for (Eigen::Index j = 0; j < v.size(); ++j)
            if (v[j] != 0) s.push_back(j);
        return s;
    }

    Eigen::Index cols_;
    std::vector<Vec<Scalar>> rows_;
    std::vector<Eigen::Index> pivots_;
    std::vector<std::vector<Eigen::Index>> support_;
};

template <typename Scalar>
RowEchelon<Scalar> row_echelon(const Mat<Scalar>& a) {
    RowEchelon<Scalar> e(a.cols());
    for (Eigen::Index i = 0; i < a.rows() && !e.full(); ++i) e.insert(a.row(i).transpose());
    return e;
}

template <typename Scalar>
Eigen::Index rank(const Mat<Scalar>& a) {
    return row_echelon(a).rank();
}

// columns span {x : a x = 0}, one per free column, in increasing order
template <typename Scalar>
Mat<Scalar> kernel(const Mat<Scalar>& a) {
    auto e = row_echelon(a);
    auto fr = e.free_columns();
    Mat<Scalar> k = Mat<Scalar>::Zero(a.cols(), static_cast<Eigen::Index>(fr.size()));
    for (std::size_t c = 0; c < fr.size(); ++c) {
        k(fr[c], c) = 1;
        for (Eigen::Index i = 0; i < e.rank(); ++i) k(e.pivots()[i], c) = -e.row(i)[fr[c]];
    }
    return k;
}

template <typename Scalar>
Mat<Scalar> eigenspace(const Mat<Scalar>& a, const Scalar& lambda) {
    Mat<Scalar> s = a;
    for (Eigen::Index i = 0; i < s.rows(); ++i) s(i, i) -= lambda;
    return kernel(s);
}

// row space of the columns of a, in echelon form
template <typename Scalar>
RowEchelon<Scalar> column_space(const Mat<Scalar>& a) {
    RowEchelon<Scalar> e(a.rows());
    for (Eigen::Index j = 0; j < a.cols() && !e.full(); ++j) e.insert(a.col(j));
    return e;
}

template <typename Scalar>
Scalar determinant(Mat<Scalar> a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
    const Eigen::Index n = a.rows();
    Scalar det = 1;
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            a.row(p).swap(a.row(c));
            det = -det;
        }
        det *= a(c, c);
        for (Eigen::Index i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            const Scalar f = a(i, c) / a(c, c);
            for (Eigen::Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

template <typename Scalar>
std::optional<Mat<Scalar>> inverse(const Mat<Scalar>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
    const Eigen::Index n = a.rows();
    Mat<Scalar> aug(n, 2 * n);
    aug << a, Mat<Scalar>::Identity(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = c;
        while (p < n && aug(p, c) == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != c) aug.row(p).swap(aug.row(c));
        const Scalar lead = aug(c, c);
        aug.row(c) /= lead;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == c || aug(i, c) == 0) continue;
            const Scalar f = aug(i, c);
            aug.row(i) -= f * aug.row(c);
        }
    }
    return Mat<Scalar>(aug.rightCols(n));
}

// some x with a x = b (free variables set to zero), nullopt if inconsistent
template <typename Scalar>
std::optional<Vec<Scalar>> solve(const Mat<Scalar>& a, const Vec<Scalar>& b) {
    Mat<Scalar> aug(a.rows(), a.cols() + 1);
    aug << a, b;
    auto e = row_echelon(aug);
    Vec<Scalar> x = Vec<Scalar>::Zero(a.cols());
    for (Eigen::Index i = 0; i < e.rank(); ++i) {
        if (e.pivots()[i] == a.cols()) return std::nullopt;
        x[e.pivots()[i]] = e.row(i)[a.cols()];
    }
    return x;
}

// rows of `target` as combinations of rows of `basis`: target = c * basis
template <typename Scalar>
std::optional<Mat<Scalar>> row_combination(const Mat<Scalar>& basis, const Mat<Scalar>& target) {
    Mat<Scalar> c(target.rows(), basis.rows());
    Mat<Scalar> bt = basis.transpose();
    for (Eigen::Index i = 0; i < target.rows(); ++i) {
        auto x = solve(bt, Vec<Scalar>(target.row(i).transpose()));
        if (!x) return std::nullopt;
        c.row(i) = x->transpose();
    }
    return c;
}

}  // namespace defw
