#pragma once

#include <complex>
#include <cstddef>
#include <ostream>
#include <vector>

#include "trizeta/rational.hpp"

namespace trizeta {

template <typename C>
struct is_exact_coeff : std::true_type {};
template <>
struct is_exact_coeff<std::complex<double>> : std::false_type {};
template <>
struct is_exact_coeff<double> : std::false_type {};

// Dense row-major matrix.  MatrixQ (over Rational) is the exact workhorse;
// the complex instantiation backs the numeric Schur evaluations.
template <typename C>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, C fill = C(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = C(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    C& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const C& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("Matrix: product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const C& aik = a.at(i, k);
                if (coeff_is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("Matrix: sum shape mismatch");
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<C> row(std::size_t i) const {
        return std::vector<C>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? "; " : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << coeff_str(m.at(i, j));
        }
        return os << "]";
    }

private:
    std::size_t rows_, cols_;
    std::vector<C> data_;
};

using MatrixQ = Matrix<Rational>;

namespace detail {

// Integer Bareiss elimination.  Exact divisions keep intermediate entries at
// the size of minors instead of products of pivots.
inline Int bareiss_det(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return Int(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace detail

// Exact determinant.  Rows are scaled to a common integer denominator and the
// elimination runs fraction-free over the integers.
inline Rational det_exact(const MatrixQ& m) {
    if (m.rows() != m.cols()) throw DimensionError("det_exact: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    std::vector<std::vector<Int>> im(n, std::vector<Int>(n));
    Rational scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Int l(1);
        for (std::size_t j = 0; j < n; ++j) l = lcm(l, den(m.at(i, j)));
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = m.at(i, j) * Rational(l);
            im[i][j] = num(v);
        }
        scale *= Rational(l);
    }
    Rational d = Rational(detail::bareiss_det(std::move(im))) / scale;
    guard_bits(d);
    return d;
}

// Determinant of a complex matrix by partially pivoted elimination.
inline std::complex<double> det_numeric(const Matrix<std::complex<double>>& m) {
    if (m.rows() != m.cols()) throw DimensionError("det_numeric: matrix is not square");
    const std::size_t n = m.rows();
    std::vector<std::vector<std::complex<double>>> a(n, std::vector<std::complex<double>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    std::complex<double> det(1.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
        if (a[piv][k] == std::complex<double>(0.0, 0.0)) return {0.0, 0.0};
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            std::complex<double> f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

namespace detail {

// Row echelon form over Q; returns pivot columns.  `reduced` additionally
// clears above pivots and rescales them to 1.
inline std::vector<std::size_t> echelon(MatrixQ& m, bool reduced) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, c) == 0) continue;
            Rational f = m.at(i, c) / m.at(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    if (reduced) {
        for (std::size_t k = pivots.size(); k-- > 0;) {
            std::size_t c = pivots[k];
            Rational inv = Rational(1) / m.at(k, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(k, j) *= inv;
            for (std::size_t i = 0; i < k; ++i) {
                Rational f = m.at(i, c);
                if (f == 0) continue;
                for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(k, j);
            }
        }
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank_exact(const MatrixQ& m) {
    MatrixQ work = m;
    return detail::echelon(work, false).size();
}

// Basis of the right null space; empty iff the matrix has full column rank.
inline std::vector<std::vector<Rational>> kernel_basis(const MatrixQ& m) {
    MatrixQ work = m;
    std::vector<std::size_t> pivots = detail::echelon(work, true);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free_col] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -work.at(k, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace trizeta
