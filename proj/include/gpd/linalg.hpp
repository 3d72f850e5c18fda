#pragma once

/*
 * Dense exact linear algebra over the rationals and complex rationals.
 *
 * Everything is small and dense here; plain Gauss-Jordan elimination with
 * exact division is fast enough and keeps the code obvious. The helpers a
 * caller actually needs are: reduced row echelon form, rank, a kernel
 * basis, linear solves, and an incremental row-space object for span
 * membership tests.
 */

#include <gpd/rational.hpp>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gpd {

template <typename T>
struct Mat {
    int nr = 0;
    int nc = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : nr(r), nc(c), a(static_cast<size_t>(r) * c) {}

    T& operator()(int i, int j) { return a[static_cast<size_t>(i) * nc + j]; }
    const T& operator()(int i, int j) const { return a[static_cast<size_t>(i) * nc + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Mat from_columns(const std::vector<std::vector<T>>& cols) {
        if (cols.empty()) return Mat(0, 0);
        Mat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
        for (int j = 0; j < m.nc; ++j) {
            if (static_cast<int>(cols[j].size()) != m.nr)
                throw std::invalid_argument("ragged column list");
            for (int i = 0; i < m.nr; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    std::vector<T> column(int j) const {
        std::vector<T> v(nr);
        for (int i = 0; i < nr; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Mat transpose() const {
        Mat m(nc, nr);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Mat conj_transpose() const {
        Mat m(nc, nr);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) m(j, i) = conj_val((*this)(i, j));
        return m;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        if (x.nr != y.nr || x.nc != y.nc) throw std::invalid_argument("shape mismatch");
        Mat m(x.nr, x.nc);
        for (size_t k = 0; k < x.a.size(); ++k) m.a[k] = x.a[k] + y.a[k];
        return m;
    }

    friend Mat operator-(const Mat& x, const Mat& y) {
        if (x.nr != y.nr || x.nc != y.nc) throw std::invalid_argument("shape mismatch");
        Mat m(x.nr, x.nc);
        for (size_t k = 0; k < x.a.size(); ++k) m.a[k] = x.a[k] - y.a[k];
        return m;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.nc != y.nr) throw std::invalid_argument("shape mismatch");
        Mat m(x.nr, y.nc);
        for (int i = 0; i < x.nr; ++i)
            for (int k = 0; k < x.nc; ++k) {
                const T& xv = x(i, k);
                if (value_is_zero(xv)) continue;
                for (int j = 0; j < y.nc; ++j) m(i, j) += xv * y(k, j);
            }
        return m;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != nc) throw std::invalid_argument("shape mismatch");
        std::vector<T> out(nr);
        for (int i = 0; i < nr; ++i) {
            T acc{};
            for (int j = 0; j < nc; ++j)
                if (!value_is_zero((*this)(i, j))) acc += (*this)(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.nr == y.nr && x.nc == y.nc && x.a == y.a;
    }

    bool is_zero() const {
        for (const T& v : a)
            if (!value_is_zero(v)) return false;
        return true;
    }
};

/* In-place reduced row echelon form; returns the pivot column of each
 * pivot row in order. */
template <typename T>
std::vector<int> rref(Mat<T>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.nc && row < m.nr; ++col) {
        int p = -1;
        for (int i = row; i < m.nr; ++i)
            if (!value_is_zero(m(i, col))) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.nc; ++j) std::swap(m(p, j), m(row, j));
        T inv = T(1) / m(row, col);
        for (int j = col; j < m.nc; ++j) m(row, j) = m(row, j) * inv;
        for (int i = 0; i < m.nr; ++i) {
            if (i == row || value_is_zero(m(i, col))) continue;
            T f = m(i, col);
            for (int j = col; j < m.nc; ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <typename T>
int rank(Mat<T> m) {
    return static_cast<int>(rref(m).size());
}

/* Columns of the returned matrix form a basis of {v : m v = 0}. */
template <typename T>
Mat<T> kernel_basis(Mat<T> m) {
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(m.nc, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> cols;
    for (int freec = 0; freec < m.nc; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<T> v(m.nc);
        v[freec] = T(1);
        for (size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -m(static_cast<int>(pr), freec);
        cols.push_back(std::move(v));
    }
    if (cols.empty()) return Mat<T>(m.nc, 0);
    return Mat<T>::from_columns(cols);
}

/* Solves m x = b; empty when inconsistent. */
template <typename T>
std::optional<std::vector<T>> solve(const Mat<T>& m, const std::vector<T>& b) {
    if (static_cast<int>(b.size()) != m.nr) throw std::invalid_argument("shape mismatch");
    Mat<T> aug(m.nr, m.nc + 1);
    for (int i = 0; i < m.nr; ++i) {
        for (int j = 0; j < m.nc; ++j) aug(i, j) = m(i, j);
        aug(i, m.nc) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.nc) return std::nullopt;
    std::vector<T> x(m.nc);
    for (size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug(static_cast<int>(pr), m.nc);
    return x;
}

/* Incremental row-space: insert vectors one by one, test membership. */
template <typename T>
struct RowSpan {
    int dim = 0;
    std::vector<std::pair<int, std::vector<T>>> rows;  // (pivot index, normalized row)

    explicit RowSpan(int ambient) : dim(ambient) {}

    std::vector<T> residual(std::vector<T> v) const {
        for (const auto& [p, r] : rows) {
            if (value_is_zero(v[p])) continue;
            T f = v[p];
            for (int j = 0; j < dim; ++j) v[j] = v[j] - f * r[j];
        }
        return v;
    }

    bool contains(const std::vector<T>& v) const {
        std::vector<T> res = residual(v);
        for (const T& x : res)
            if (!value_is_zero(x)) return false;
        return true;
    }

    /* True when the vector enlarged the span. */
    bool insert(const std::vector<T>& v) {
        if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("shape mismatch");
        std::vector<T> res = residual(v);
        int p = -1;
        for (int j = 0; j < dim; ++j)
            if (!value_is_zero(res[j])) { p = j; break; }
        if (p < 0) return false;
        T inv = T(1) / res[p];
        for (int j = 0; j < dim; ++j) res[j] = res[j] * inv;
        rows.emplace_back(p, std::move(res));
        return true;
    }

    int rank() const { return static_cast<int>(rows.size()); }
};

/* Greedy choice of a maximal independent subset of columns. */
template <typename T>
std::vector<int> independent_columns(const Mat<T>& m) {
    RowSpan<T> span(m.nr);
    std::vector<int> keep;
    for (int j = 0; j < m.nc; ++j)
        if (span.insert(m.column(j))) keep.push_back(j);
    return keep;
}

}  // namespace gpd
