#pragma once

#include <algorithm>
#include <vector>

#include "matrix.hpp"

namespace crtube {

/// Linear subspace of T^n stored as the canonical reduced row echelon basis.
template <class T>
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t n) : n_(n) {}

    static Subspace span(std::size_t n, const std::vector<Vec<T>>& vs)
    {
        Subspace s(n);
        if (vs.empty())
            return s;
        Matrix<T> m = Matrix<T>::from_rows(vs, n);
        s.pivots_ = rref_in_place(m);
        for (std::size_t i = 0; i < s.pivots_.size(); ++i)
            s.basis_.push_back(m.row(i));
        return s;
    }

    static Subspace full(std::size_t n)
    {
        std::vector<Vec<T>> vs;
        for (std::size_t i = 0; i < n; ++i)
            vs.push_back(unit_vec<T>(n, i));
        return span(n, vs);
    }

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<Vec<T>>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Subtracts the pivot components; the result is zero iff v lies in the space.
    Vec<T> reduce(Vec<T> v) const
    {
        check_len(v.size());
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            T f = v[pivots_[i]];
            if (crtube::is_zero(f))
                continue;
            for (std::size_t j = 0; j < n_; ++j)
                v[j] -= f * basis_[i][j];
        }
        return v;
    }

    bool contains(const Vec<T>& v) const { return is_zero_vec(reduce(v)); }

    bool contains(const Subspace& o) const
    {
        check_len(o.n_);
        for (const auto& v : o.basis_)
            if (!contains(v))
                return false;
        return true;
    }

    /// Coordinates of v in the echelon basis; v must lie in the space.
    Vec<T> coords(const Vec<T>& v) const
    {
        if (!contains(v))
            throw precondition_error("vector not in subspace");
        Vec<T> c(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i)
            c[i] = v[pivots_[i]];
        return c;
    }

    /// Rows c with c . s = 0 for every s in the space (bilinear pairing).
    Matrix<T> constraints() const
    {
        auto ns = basis_.empty() ? identity_rows() : null_space(Matrix<T>::from_rows(basis_, n_));
        return Matrix<T>::from_rows(ns, n_);
    }

    Matrix<T> basis_matrix() const { return Matrix<T>::from_rows(basis_, n_); }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    void check_len(std::size_t m) const
    {
        if (m != n_)
            throw dimension_error("ambient dimension mismatch");
    }

    std::vector<Vec<T>> identity_rows() const
    {
        std::vector<Vec<T>> r;
        for (std::size_t i = 0; i < n_; ++i)
            r.push_back(unit_vec<T>(n_, i));
        return r;
    }

    std::size_t n_ = 0;
    std::vector<Vec<T>> basis_;
    std::vector<std::size_t> pivots_;
};

using QSubspace = Subspace<Rational>;
using CSubspace = Subspace<Gaussian>;

template <class T>
Subspace<T> kernel(const Matrix<T>& m)
{
    return Subspace<T>::span(m.cols(), null_space(m));
}

template <class T>
Subspace<T> image(const Matrix<T>& m)
{
    std::vector<Vec<T>> cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        cols.push_back(m.col(j));
    return Subspace<T>::span(m.rows(), cols);
}

template <class T>
Subspace<T> sum(const Subspace<T>& u, const Subspace<T>& w)
{
    if (u.ambient() != w.ambient())
        throw dimension_error("ambient dimension mismatch");
    auto vs = u.basis();
    vs.insert(vs.end(), w.basis().begin(), w.basis().end());
    return Subspace<T>::span(u.ambient(), vs);
}

template <class T>
Subspace<T> intersect(const Subspace<T>& u, const Subspace<T>& w)
{
    if (u.ambient() != w.ambient())
        throw dimension_error("ambient dimension mismatch");
    std::size_t n = u.ambient();
    Matrix<T> cu = u.constraints(), cw = w.constraints();
    Matrix<T> c(cu.rows() + cw.rows(), n);
    for (std::size_t i = 0; i < cu.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            c(i, j) = cu(i, j);
    for (std::size_t i = 0; i < cw.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            c(cu.rows() + i, j) = cw(i, j);
    if (c.rows() == 0)
        return Subspace<T>::full(n);
    return kernel(c);
}

/// {v : m v in s}.
template <class T>
Subspace<T> preimage(const Matrix<T>& m, const Subspace<T>& s)
{
    if (m.rows() != s.ambient())
        throw dimension_error("preimage shape mismatch");
    Matrix<T> c = s.constraints();
    if (c.rows() == 0)
        return Subspace<T>::full(m.cols());
    return kernel(c * m);
}

/// m(s) as a subspace of the codomain.
template <class T>
Subspace<T> push_forward(const Matrix<T>& m, const Subspace<T>& s)
{
    std::vector<Vec<T>> vs;
    for (const auto& v : s.basis())
        vs.push_back(m * v);
    return Subspace<T>::span(m.rows(), vs);
}

inline CSubspace complexify(const QSubspace& s)
{
    std::vector<CVec> vs;
    for (const auto& v : s.basis())
        vs.push_back(complexify(v));
    return CSubspace::span(s.ambient(), vs);
}

/// Entrywise conjugate of a complex subspace.
inline CSubspace conj(const CSubspace& s)
{
    std::vector<CVec> vs;
    for (const auto& v : s.basis())
        vs.push_back(conj_vec(v));
    return CSubspace::span(s.ambient(), vs);
}

/// Real vectors lying in w: the real kernel of the stacked real and imaginary constraints.
inline QSubspace real_points(const CSubspace& w)
{
    std::size_t n = w.ambient();
    CMatrix c = w.constraints();
    if (c.rows() == 0)
        return QSubspace::full(n);
    QMatrix m(2 * c.rows(), n);
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m(2 * i, j) = c(i, j).re;
            m(2 * i + 1, j) = c(i, j).im;
        }
    return kernel(m);
}

} // namespace crtube
