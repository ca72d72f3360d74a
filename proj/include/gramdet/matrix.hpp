#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gramdet/bigint.hpp"
#include "gramdet/rational.hpp"

namespace gramdet {

// Raised by exact inversion when a zero pivot column is found; `stage` is the
// elimination column at which the matrix proved singular.
class singular_matrix_error : public std::domain_error {
public:
    explicit singular_matrix_error(size_t stage)
        : std::domain_error("singular matrix at elimination stage " + std::to_string(stage)), stage_(stage) {}
    size_t stage() const { return stage_; }

private:
    size_t stage_;
};

// Dense rectangular matrix over an exact scalar (big_int or rational).
template <typename T>
class matrix {
public:
    matrix() = default;
    matrix(size_t rows, size_t cols, const T& fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static matrix identity(size_t n) {
        matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const matrix& a, const matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const matrix& a, const matrix& b) { return !(a == b); }

    friend matrix operator*(const matrix& a, const matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix: shape mismatch in product");
        matrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + aik * b(k, j);
            }
        return r;
    }

    matrix transposed() const {
        matrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using int_matrix = matrix<big_int>;
using rat_matrix = matrix<rational>;

// Exact determinant by fraction-free (Bareiss) elimination. All divisions in
// the update are exact; entries stay at k x k minor size. det of the empty
// matrix is 1.
inline big_int det_exact(const int_matrix& m) {
    if (!m.square()) throw std::invalid_argument("det_exact: non-square matrix");
    size_t n = m.rows();
    if (n == 0) return big_int(1);
    int_matrix a = m;
    big_int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            size_t piv = k + 1;
            while (piv < n && a(piv, k).is_zero()) ++piv;
            if (piv == n) return big_int(0);
            for (size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = big_int(0);
        }
        prev = a(k, k);
    }
    big_int d = a(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

// Exact inverse over the rationals by Gauss-Jordan elimination with pivot
// selection by nonzero scan. Throws singular_matrix_error carrying the
// failing stage.
inline rat_matrix invert_rational(const rat_matrix& m) {
    if (!m.square()) throw std::invalid_argument("invert_rational: non-square matrix");
    size_t n = m.rows();
    rat_matrix a = m, inv = rat_matrix::identity(n);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && a(piv, k).is_zero()) ++piv;
        if (piv == n) throw singular_matrix_error(k);
        if (piv != k)
            for (size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(piv, j));
                std::swap(inv(k, j), inv(piv, j));
            }
        rational d = a(k, k);
        for (size_t j = 0; j < n; ++j) {
            a(k, j) /= d;
            inv(k, j) /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero()) continue;
            rational f = a(i, k);
            for (size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

inline rat_matrix to_rational_matrix(const int_matrix& m) {
    rat_matrix r(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) r(i, j) = rational(m(i, j));
    return r;
}

}  // namespace gramdet
