/**
 * @file approx.hpp
 * @brief Floating-point helpers for numeric oracles.
 *
 * Nothing in the exact modules includes this header. It needs Eigen.
 */
#pragma once

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "exact/polynomial.hpp"

namespace crtube::approx {

inline constexpr double default_tol = 1e-9;

using cplx = std::complex<double>;

/// Roots of a squarefree polynomial: companion eigenvalues, then Newton polishing.
inline std::vector<cplx> simple_roots(const UPoly& p)
{
    UPoly q = p.monic();
    int n = q.degree();
    std::vector<cplx> out;
    if (n < 1)
        return out;
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i)
        c(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i)
        c(i, n - 1) = -to_double(q.coeff(i));
    Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
    std::vector<std::complex<long double>> coef(n + 1);
    for (int k = 0; k <= n; ++k)
        coef[k] = static_cast<long double>(to_double(q.coeff(k)));
    for (int i = 0; i < n; ++i) {
        std::complex<long double> z(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
        for (int it = 0; it < 50; ++it) {
            std::complex<long double> f = 0, df = 0;
            for (int k = n; k >= 0; --k) {
                df = df * z + f;
                f = f * z + coef[k];
            }
            if (std::abs(df) == 0.0L)
                break;
            auto step = f / df;
            z -= step;
            if (std::abs(step) <= 1e-18L * std::max<long double>(1.0L, std::abs(z)))
                break;
        }
        out.emplace_back(static_cast<double>(z.real()), static_cast<double>(z.imag()));
    }
    return out;
}

/// Roots with multiplicity, using the squarefree factors so every numeric solve is well conditioned.
inline std::vector<cplx> roots_with_multiplicity(const UPoly& p)
{
    std::vector<cplx> out;
    auto parts = squarefree_decomposition(p);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (const auto& z : simple_roots(parts[i]))
            for (std::size_t k = 0; k <= i; ++k)
                out.push_back(z);
    return out;
}

/// Clusters raw root approximations within tol and counts cluster sizes.
inline std::vector<std::size_t> cluster_sizes(const std::vector<cplx>& roots, double tol)
{
    std::vector<bool> used(roots.size(), false);
    std::vector<std::size_t> sizes;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i])
            continue;
        std::size_t s = 0;
        for (std::size_t j = i; j < roots.size(); ++j)
            if (!used[j] && std::abs(roots[j] - roots[i]) <= tol) {
                used[j] = true;
                ++s;
            }
        sizes.push_back(s);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

/// Whether a multiset of complex numbers is an arithmetic progression.
inline bool is_progression(const std::vector<cplx>& roots, double tol = default_tol)
{
    std::size_t n = roots.size();
    if (n <= 2)
        return true;
    double scale = 1.0;
    for (const auto& z : roots)
        scale = std::max(scale, std::abs(z));
    double eps = tol * scale;
    std::size_t ia = 0, ib = 0;
    double best = -1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(roots[i] - roots[j]) > best) {
                best = std::abs(roots[i] - roots[j]);
                ia = i;
                ib = j;
            }
    if (best <= eps)
        return true;
    cplx start = roots[ia];
    cplx step = (roots[ib] - roots[ia]) / static_cast<double>(n - 1);
    std::vector<bool> used(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        cplx target = start + static_cast<double>(k) * step;
        std::size_t hit = n;
        double dist = eps;
        for (std::size_t j = 0; j < n; ++j)
            if (!used[j] && std::abs(roots[j] - target) <= dist) {
                dist = std::abs(roots[j] - target);
                hit = j;
            }
        if (hit == n)
            return false;
        used[hit] = true;
    }
    return true;
}

} // namespace crtube::approx
