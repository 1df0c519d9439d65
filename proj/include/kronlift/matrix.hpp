#pragma once

// Dense matrices over an exact scalar type and Gauss-Jordan elimination.
// Scalars are Rational, Integer or FieldElement; each matrix carries a zero
// prototype so that FieldElement matrices know their field even when empty.

#include "kronlift/error.hpp"
#include "kronlift/numfield.hpp"

#include <cstddef>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

namespace kronlift {

inline bool is_zero(const Rational &q) { return q == 0; }
inline bool is_zero(const Integer &z) { return z == 0; }
inline bool is_zero(const FieldElement &x) { return x.is_zero(); }

inline Rational one_like(const Rational &) { return Rational(1); }
inline Integer one_like(const Integer &) { return Integer(1); }
inline FieldElement one_like(const FieldElement &z) { return FieldElement(z.field(), Rational(1)); }

template <class T> class Matrix {
  public:
    Matrix()
        requires std::is_default_constructible_v<T>
        : zero_() {}
    Matrix(std::size_t rows, std::size_t cols, const T &zero)
        : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

    static Matrix identity(std::size_t n, const T &zero) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = one_like(zero);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>> &rows, std::size_t cols,
                            const T &zero) {
        Matrix m(rows.size(), cols, zero);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw Error(Errc::MalformedInput, "ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const T &zero() const { return zero_; }

    T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            out.push_back((*this)(i, j));
        return out;
    }

    void append_row(const std::vector<T> &r) {
        if (r.size() != cols_)
            throw Error(Errc::MalformedInput, "row length mismatch");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero_matrix() const {
        for (const auto &x : data_)
            if (!kronlift::is_zero(x))
                return false;
        return true;
    }

    bool operator==(const Matrix &rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    T zero_;
    std::vector<T> data_;
};

template <class T> Matrix<T> operator*(const Matrix<T> &a, const Matrix<T> &b) {
    if (a.cols() != b.rows())
        throw Error(Errc::MalformedInput, "matrix product dimension mismatch");
    Matrix<T> c(a.rows(), b.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k)))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!is_zero(b(k, j)))
                    c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <class T>
std::vector<T> mat_vec(const Matrix<T> &a, const std::vector<T> &v) {
    if (a.cols() != v.size())
        throw Error(Errc::MalformedInput, "matrix-vector dimension mismatch");
    std::vector<T> out(a.rows(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!is_zero(a(i, j)) && !is_zero(v[j]))
                out[i] += a(i, j) * v[j];
    return out;
}

template <class T> struct Echelon {
    Matrix<T> reduced;
    std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

/// Reduced row echelon form over a field.
template <class T> Echelon<T> rref(Matrix<T> m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c)))
            ++p;
        if (p == m.rows())
            continue;
        m.swap_rows(r, p);
        const T one = one_like(m.zero());
        if (m(r, c) != one) {
            T inv = one / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j)))
                    m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c)))
                continue;
            T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j)))
                    m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

template <class T> std::size_t rank(const Matrix<T> &m) { return rref(m).pivots.size(); }

/// Basis of the right kernel {x : m x = 0}, one vector per row.
template <class T> Matrix<T> kernel(const Matrix<T> &m) {
    Echelon<T> e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    Matrix<T> out(0, m.cols(), m.zero());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<T> v(m.cols(), m.zero());
        v[f] = one_like(m.zero());
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = -e.reduced(i, f);
        out.append_row(v);
    }
    return out;
}

/// One solution of m x = b (free variables set to zero), or nullopt.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T> &m, const std::vector<T> &b) {
    if (b.size() != m.rows())
        throw Error(Errc::MalformedInput, "right-hand side length mismatch");
    Matrix<T> aug(m.rows(), m.cols() + 1, m.zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Echelon<T> e = rref(std::move(aug));
    std::vector<T> x(m.cols(), m.zero());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == m.cols())
            return std::nullopt;
        x[e.pivots[i]] = e.reduced(i, m.cols());
    }
    return x;
}

/// Throws SingularMatrix unless m is square of full rank.
template <class T> Matrix<T> inverse(const Matrix<T> &m) {
    if (m.rows() != m.cols())
        throw Error(Errc::SingularMatrix, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix<T> aug(n, 2 * n, m.zero());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = one_like(m.zero());
    }
    Echelon<T> e = rref(std::move(aug));
    if (n > 0 && (e.pivots.size() < n || e.pivots[n - 1] != n - 1))
        throw Error(Errc::SingularMatrix, "matrix is rank deficient");
    Matrix<T> inv(n, n, m.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = e.reduced(i, n + j);
    return inv;
}

/// Determinant by elimination over a field.
template <class T> T determinant(Matrix<T> m) {
    if (m.rows() != m.cols())
        throw Error(Errc::SingularMatrix, "determinant of a non-square matrix");
    T det = one_like(m.zero());
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m(p, c)))
            ++p;
        if (p == n)
            return m.zero();
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det *= m(c, c);
        T inv = one_like(m.zero()) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c)))
                continue;
            T f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

} // namespace kronlift
