// Independent reference computations used only by the test suites.
#pragma once

#include <complex>
#include <random>
#include <vector>

#include "crtube/exact/charpoly.hpp"
#include "crtube/exact/matrix.hpp"

namespace oracle {

using namespace crtube;

// det(x I - m) sampled at x = 0..n, then Lagrange interpolation.
inline UPoly charpoly_by_interpolation(const QMatrix& m)
{
    std::size_t n = m.rows();
    UPoly result;
    for (std::size_t i = 0; i <= n; ++i) {
        Rational xi(static_cast<long>(i));
        QMatrix s = QMatrix::identity(n) * xi - m;
        Rational yi = det_bareiss(s);
        UPoly basis(Rational(1));
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == i)
                continue;
            Rational xj(static_cast<long>(j));
            basis = basis * UPoly(std::vector<Rational>{-xj, Rational(1)}) * (Rational(1) / (xi - xj));
        }
        result = result + basis * yi;
    }
    return result;
}

// Monic polynomial with the given (Gaussian) roots, expanded factor by factor.
inline std::vector<Gaussian> expand_roots(const std::vector<Gaussian>& roots)
{
    std::vector<Gaussian> c{Gaussian(1)};  // ascending
    for (const auto& r : roots) {
        std::vector<Gaussian> next(c.size() + 1);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    return c;
}

// sigma_j read from roots: e_j of the roots.
inline std::vector<Gaussian> elementary_symmetric(const std::vector<Gaussian>& roots)
{
    auto c = expand_roots(roots);
    std::size_t n = roots.size();
    std::vector<Gaussian> e(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        Gaussian v = c[n - j];
        e[j] = (j % 2 == 0) ? v : -v;
    }
    return e;
}

inline Rational random_rational(std::mt19937_64& rng, int range = 9, int maxden = 4)
{
    std::uniform_int_distribution<int> nd(-range, range), dd(1, maxden);
    return Rational(nd(rng), dd(rng));
}

inline QMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int range = 9, int maxden = 4)
{
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = random_rational(rng, range, maxden);
    return m;
}

inline QMatrix random_invertible(std::mt19937_64& rng, std::size_t n)
{
    for (;;) {
        QMatrix g = random_matrix(rng, n, 5, 3);
        if (det_bareiss(g) != 0)
            return g;
    }
}

inline QVec random_vector(std::mt19937_64& rng, std::size_t n, int range = 6)
{
    QVec v(n);
    for (auto& x : v)
        x = random_rational(rng, range, 2);
    return v;
}

} // namespace oracle
