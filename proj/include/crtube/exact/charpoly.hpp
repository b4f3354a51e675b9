#pragma once

#include <vector>

#include "matrix.hpp"
#include "polynomial.hpp"

namespace crtube {

namespace detail {

// Berkowitz recursion on an integer matrix: division free, returns descending coefficients.
inline std::vector<BigInt> berkowitz(const Matrix<BigInt>& a)
{
    std::size_t n = a.rows();
    std::vector<BigInt> c{BigInt(1)};
    for (std::size_t r = 0; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R S, -R M S, ..., -R M^{r-1} S
        std::vector<BigInt> t(r + 2);
        t[0] = 1;
        t[1] = -a(r, r);
        std::vector<BigInt> s(r);
        for (std::size_t i = 0; i < r; ++i)
            s[i] = a(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            BigInt dot = 0;
            for (std::size_t j = 0; j < r; ++j)
                dot += a(r, j) * s[j];
            t[k + 2] = -dot;
            std::vector<BigInt> ms(r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    ms[i] += a(i, j) * s[j];
            s = std::move(ms);
        }
        std::vector<BigInt> next(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j)
                next[i] += t[i - j] * c[j];
        c = std::move(next);
    }
    return c;
}

} // namespace detail

/// det(X I - m), monic of degree n.
inline UPoly charpoly(const QMatrix& m)
{
    if (!m.square())
        throw dimension_error("charpoly of non-square matrix");
    std::size_t n = m.rows();
    BigInt d = 1;
    for (const auto& x : m.data())
        d = boost::multiprecision::lcm(d, den(x));
    Matrix<BigInt> z(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational s = m(i, j) * d;
            z(i, j) = num(s);
        }
    // chi_m(X) = d^{-n} chi_z(d X): coefficient of X^k picks up d^{k-n}
    auto desc = detail::berkowitz(z);
    std::vector<Rational> asc(n + 1);
    BigInt pw = 1;
    for (std::size_t k = n + 1; k-- > 0;) {
        asc[k] = Rational(desc[n - k], pw);
        pw *= d;
    }
    return UPoly(std::move(asc));
}

/// Monic polynomial of least degree annihilating m.
inline UPoly minimal_polynomial(const QMatrix& m)
{
    if (!m.square())
        throw dimension_error("minimal polynomial of non-square matrix");
    std::size_t n = m.rows();
    std::vector<QVec> powers;
    QMatrix p = QMatrix::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
        powers.push_back(p.data());
        QMatrix cols = QMatrix::from_columns(powers, n * n);
        auto ns = null_space(cols);
        if (!ns.empty()) {
            const QVec& v = ns.front();
            return UPoly(v).monic();
        }
        p = p * m;
    }
    throw std::logic_error("minimal polynomial search exceeded degree n");
}

/// Companion matrix whose characteristic polynomial is the monic p.
inline QMatrix companion(const UPoly& p)
{
    UPoly q = p.monic();
    int n = q.degree();
    if (n < 1)
        throw precondition_error("companion of constant polynomial");
    QMatrix c(n, n);
    for (int i = 1; i < n; ++i)
        c(i, i - 1) = 1;
    for (int i = 0; i < n; ++i)
        c(i, n - 1) = -q.coeff(i);
    return c;
}

} // namespace crtube
