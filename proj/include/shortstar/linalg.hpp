#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shortstar/errors.hpp"

namespace shortstar {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, T(0)) {}
    Matrix(int rows, int cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) m(i, j) += a(i, k) * b(k, j);
            }
        return m;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("matrix sum shape mismatch");
        Matrix m = a;
        for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix m = b;
        for (auto& v : m.data_) v = -v;
        return a + m;
    }
    Matrix scaled(const T& s) const {
        Matrix m = *this;
        for (auto& v : m.data_) v = v * s;
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!v.is_zero()) return false;
        return true;
    }

private:
    int rows_, cols_;
    std::vector<T> data_;
};

// Reduced row echelon form over a field; rank and pivot columns reported.
template <class F>
struct Rref {
    Matrix<F> mat;
    std::vector<int> pivot_cols;
    int rank = 0;
};

template <class F>
Rref<F> rref(Matrix<F> m) {
    Rref<F> out;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m(i, c).is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
        F inv = F(1) / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            F f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.mat = std::move(m);
    return out;
}

// One exact solution of A x = b with free variables set to zero, or nullopt
// if the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw Error("solve: rhs size mismatch");
    Matrix<F> aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[static_cast<std::size_t>(i)];
    }
    Rref<F> r = rref(std::move(aug));
    std::vector<F> x(static_cast<std::size_t>(a.cols()), F(0));
    for (int k = 0; k < r.rank; ++k) {
        int c = r.pivot_cols[static_cast<std::size_t>(k)];
        if (c == a.cols()) return std::nullopt;  // pivot in the rhs column
        x[static_cast<std::size_t>(c)] = r.mat(k, a.cols());
    }
    return x;
}

// Basis of the null space of A, deterministic ordering by free column.
template <class F>
std::vector<std::vector<F>> null_space(const Matrix<F>& a) {
    Rref<F> r = rref(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<F>> basis;
    for (int c = 0; c < a.cols(); ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        std::vector<F> v(static_cast<std::size_t>(a.cols()), F(0));
        v[static_cast<std::size_t>(c)] = F(1);
        for (int k = 0; k < r.rank; ++k)
            v[static_cast<std::size_t>(r.pivot_cols[static_cast<std::size_t>(k)])] = -r.mat(k, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
F determinant(Matrix<F> m) {
    if (m.rows() != m.cols()) throw Error("determinant: not square");
    int n = m.rows();
    F det(1);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (!m(i, k).is_zero()) { pivot = i; break; }
        if (pivot < 0) return F(0);
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(k, j));
            det = -det;
        }
        det = det * m(k, k);
        F inv = F(1) / m(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            F f = m(i, k) * inv;
            for (int j = k; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
        }
    }
    return det;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& a) {
    if (a.rows() != a.cols()) throw Error("inverse: not square");
    int n = a.rows();
    Matrix<F> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = F(1);
    }
    Rref<F> r = rref(std::move(aug));
    if (r.rank < n || r.pivot_cols[static_cast<std::size_t>(n - 1)] != n - 1)
        throw SingularMatrix("inverse");
    Matrix<F> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = r.mat(i, n + j);
    return inv;
}

namespace detail {
template <class D>
D exact_div(const D& a, const D& b) {
    if constexpr (requires { divexact(a, b); }) {
        return divexact(a, b);
    } else {
        return a / b;
    }
}
}  // namespace detail

// Fraction-free Bareiss determinant over an integral domain (all intermediate
// entries are minors of the input, so polynomial entries never leave the
// polynomial ring).
template <class D>
D bareiss_determinant(Matrix<D> m) {
    if (m.rows() != m.cols()) throw Error("bareiss: not square");
    int n = m.rows();
    if (n == 0) return D(1);
    D prev(1);
    bool negate = false;
    for (int k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m(i, k).is_zero()) { pivot = i; break; }
            if (pivot < 0) return D(0);
            for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(k, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m(i, j) = detail::exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
            m(i, k) = D(0);
        }
        prev = m(k, k);
    }
    return negate ? D(0) - m(n - 1, n - 1) : m(n - 1, n - 1);
}

// Leading principal minors det A[0..k][0..k], k = 0..n-1. Used for exact
// positive-definiteness certificates.
template <class F>
std::vector<F> leading_principal_minors(const Matrix<F>& a) {
    if (a.rows() != a.cols()) throw Error("minors: not square");
    std::vector<F> out;
    for (int k = 1; k <= a.rows(); ++k) {
        Matrix<F> sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub(i, j) = a(i, j);
        out.push_back(determinant(std::move(sub)));
    }
    return out;
}

}  // namespace shortstar
