#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace crtube {

template <class T>
using Vec = std::vector<T>;

using QVec = Vec<Rational>;
using CVec = Vec<Gaussian>;

// Dense row-major matrix over an exact field.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<Vec<T>>& rows, std::size_t cols)
    {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw dimension_error("ragged row in matrix");
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_rows(const std::vector<Vec<T>>& rows)
    {
        return from_rows(rows, rows.empty() ? 0 : rows.front().size());
    }

    static Matrix from_columns(const std::vector<Vec<T>>& cols, std::size_t rows)
    {
        return from_rows(cols, rows).transpose();
    }

    static Matrix diagonal(const Vec<T>& d)
    {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Vec<T> row(std::size_t i) const { return Vec<T>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
    Vec<T> col(std::size_t j) const
    {
        Vec<T> v(r_);
        for (std::size_t i = 0; i < r_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    Matrix transpose() const
    {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    T trace() const
    {
        if (!square())
            throw dimension_error("trace of non-square matrix");
        T s(0);
        for (std::size_t i = 0; i < r_; ++i)
            s += (*this)(i, i);
        return s;
    }

    bool is_zero() const
    {
        for (const auto& x : a_)
            if (!crtube::is_zero(x))
                return false;
        return true;
    }

    const std::vector<T>& data() const { return a_; }

    Matrix& operator+=(const Matrix& o)
    {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o)
    {
        check_same(o);
        for (std::size_t k = 0; k < a_.size(); ++k)
            a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(const T& s)
    {
        for (auto& x : a_)
            x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.c_ != b.r_)
            throw dimension_error("matrix product shape mismatch");
        Matrix p(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (crtube::is_zero(x))
                    continue;
                for (std::size_t j = 0; j < b.c_; ++j)
                    p(i, j) += x * b(k, j);
            }
        return p;
    }

    friend Vec<T> operator*(const Matrix& a, const Vec<T>& v)
    {
        if (a.c_ != v.size())
            throw dimension_error("matrix-vector shape mismatch");
        Vec<T> out(a.r_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t j = 0; j < a.c_; ++j)
                if (!crtube::is_zero(v[j]))
                    out[i] += a(i, j) * v[j];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    void check_same(const Matrix& o) const
    {
        if (r_ != o.r_ || c_ != o.c_)
            throw dimension_error("matrix shapes differ");
    }

    std::size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;
using CMatrix = Matrix<Gaussian>;

template <class T>
Vec<T> operator+(Vec<T> a, const Vec<T>& b)
{
    if (a.size() != b.size())
        throw dimension_error("vector lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

template <class T>
Vec<T> operator-(Vec<T> a, const Vec<T>& b)
{
    if (a.size() != b.size())
        throw dimension_error("vector lengths differ");
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

template <class T>
Vec<T> scale(const T& s, Vec<T> v)
{
    for (auto& x : v)
        x *= s;
    return v;
}

template <class T>
bool is_zero_vec(const Vec<T>& v)
{
    for (const auto& x : v)
        if (!is_zero(x))
            return false;
    return true;
}

template <class T>
Vec<T> unit_vec(std::size_t n, std::size_t i)
{
    Vec<T> v(n);
    v.at(i) = T(1);
    return v;
}

inline CVec complexify(const QVec& v) { return CVec(v.begin(), v.end()); }

inline CMatrix complexify(const QMatrix& m)
{
    CMatrix c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            c(i, j) = m(i, j);
    return c;
}

inline CVec conj_vec(CVec v)
{
    for (auto& x : v)
        x = conj(x);
    return v;
}

/// Reduced row echelon form; returns pivot columns in increasing order.
template <class T>
std::vector<std::size_t> rref_in_place(Matrix<T>& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c)))
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        T inv = T(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c)))
                continue;
            T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m)
{
    return rref_in_place(m).size();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <class T>
std::vector<Vec<T>> null_space(Matrix<T> m)
{
    auto piv = rref_in_place(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv)
        is_piv[p] = true;
    std::vector<Vec<T>> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f])
            continue;
        Vec<T> v(m.cols());
        v[f] = T(1);
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = -m(i, f);
        out.push_back(std::move(v));
    }
    return out;
}

/// Solves m x = b for one particular solution; returns false if inconsistent.
template <class T>
bool solve(const Matrix<T>& m, const Vec<T>& b, Vec<T>& x)
{
    if (b.size() != m.rows())
        throw dimension_error("right-hand side length mismatch");
    Matrix<T> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto piv = rref_in_place(aug);
    if (!piv.empty() && piv.back() == m.cols())
        return false;
    x.assign(m.cols(), T(0));
    for (std::size_t i = 0; i < piv.size(); ++i)
        x[piv[i]] = aug(i, m.cols());
    return true;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m)
{
    if (!m.square())
        throw dimension_error("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    auto piv = rref_in_place(aug);
    if (piv.size() < n || piv[n - 1] != n - 1)
        throw std::domain_error("singular matrix");
    Matrix<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

/// Fraction-free Bareiss determinant; exact division at every step.
template <class T>
T det_bareiss(Matrix<T> m)
{
    if (!m.square())
        throw dimension_error("determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0)
        return T(1);
    T prev(1);
    bool neg = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && is_zero(m(p, k)))
                ++p;
            if (p == n)
                return T(0);
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(p, j), m(k, j));
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return neg ? T(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

} // namespace crtube
