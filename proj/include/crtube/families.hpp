/**
 * @file families.hpp
 * @brief Named tube data, endomorphisms and CR-algebras used by the catalog.
 */
#pragma once

#include <array>
#include <string>
#include <vector>

#include "cralgebra.hpp"
#include "endo.hpp"
#include "tube.hpp"

namespace crtube::families {

inline AffineField linear_field(const QMatrix& m) { return {m, QVec(m.rows())}; }

inline QMatrix rows3(std::initializer_list<std::initializer_list<Rational>> rs)
{
    std::vector<QVec> v;
    for (auto r : rs)
        v.emplace_back(r);
    return QMatrix::from_rows(v, 3);
}

// ---- endomorphisms on R^3

/// x2 d1 - x1 d2, spectrum {i, -i, 0}.
inline QMatrix ei() { return rows3({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}); }

/// x1 d2 - x2 d1 + w x3 d3, spectrum {i, -i, w}.
inline QMatrix ey(const Rational& w)
{
    if (w <= 0)
        throw invalid_input("EY needs w > 0");
    return rows3({{0, -1, 0}, {1, 0, 0}, {0, 0, w}});
}

/// x1 d2 + x3 d3, roots 0, 0, 1.
inline QMatrix ez() { return rows3({{0, 0, 0}, {1, 0, 0}, {0, 0, 1}}); }

/// x2 d2 + t x3 d3, eigenvalues 0, 1, t.
inline QMatrix ex(const Rational& t)
{
    if (t <= 2)
        throw invalid_input("EX needs t > 2");
    return QMatrix::diagonal(QVec{0, 1, t});
}

/// Lower shift on binary forms of degree m: x_j picks up j x_{j-1}.
inline QMatrix raise(int m)
{
    std::size_t n = static_cast<std::size_t>(m) + 1;
    QMatrix r(n, n);
    for (int j = 1; j <= m; ++j)
        r(j, j - 1) = j;
    return r;
}

/// Single nilpotent Jordan block.
inline QMatrix nilpotent(std::size_t n)
{
    QMatrix r(n, n);
    for (std::size_t j = 1; j < n; ++j)
        r(j, j - 1) = 1;
    return r;
}

/// diag(-(n-1)/2, ..., (n-1)/2).
inline QMatrix real_progression(std::size_t n)
{
    QVec d;
    for (std::size_t k = 0; k < n; ++k)
        d.push_back(Rational(2 * static_cast<long>(k) - static_cast<long>(n) + 1, 2));
    return QMatrix::diagonal(d);
}

// ---- tube data

/// gl(2) fields on binary forms of degree m in the order zeta_1, zeta_2, xi^{1,-1}, xi^{-1,1}.
inline std::array<AffineField, 4> binary_form_fields(int m)
{
    std::size_t n = static_cast<std::size_t>(m) + 1;
    QMatrix z1(n, n), z2(n, n), lower(n, n);
    for (int j = 0; j <= m; ++j) {
        z1(j, j) = j;
        z2(j, j) = m - j;
        if (j < m)
            lower(j, j + 1) = m - j;
    }
    return {linear_field(z1), linear_field(z2), linear_field(raise(m)), linear_field(lower)};
}

/// Keeps candidates whose values at a stay independent, in order.
inline std::vector<AffineField> greedy_fields(const QVec& a, const std::vector<AffineField>& cands)
{
    std::vector<AffineField> out;
    std::vector<QVec> vals;
    for (const auto& f : cands) {
        vals.push_back(f(a));
        if (QSubspace::span(a.size(), vals).dim() == vals.size())
            out.push_back(f);
        else
            vals.pop_back();
    }
    return out;
}

/// The invariant quartic of binary cubics through (1, 1, 0, 0).
inline MPoly binary_cubic_quartic()
{
    MPoly p(4);
    p.add_term({2, 0, 0, 2}, 1);
    p.add_term({1, 0, 3, 0}, 4);
    p.add_term({1, 1, 1, 1}, -6);
    p.add_term({0, 2, 2, 0}, -3);
    p.add_term({0, 3, 0, 1}, 4);
    return p;
}

/// Orbit of sum_{j <= k-2} u1^j u2^{m-j} under GL(2), m = k + c - 1.
inline TubeDatum jp(int k, int c)
{
    if (k < 2 || k > 4 || c < 1)
        throw invalid_input("JP needs k in {2, 3, 4} and c >= 1");
    int m = k + c - 1;
    std::size_t n = static_cast<std::size_t>(m) + 1;
    QVec a(n);
    for (int j = 0; j <= k - 2; ++j)
        a[j] = 1;
    auto f = binary_form_fields(m);
    TubeDatum td{n, a, greedy_fields(a, {f.begin(), f.end()}), {}};
    if (k == 3 && c == 1)
        td.witnesses.push_back(binary_cubic_quartic());
    return td;
}

/// Cone over the rational normal curve: x0 x_{j+1} = x1 x_j.
inline std::vector<MPoly> rational_normal_quadrics(int m)
{
    std::size_t n = static_cast<std::size_t>(m) + 1;
    std::vector<MPoly> qs;
    for (int j = 1; j < m; ++j)
        qs.push_back(MPoly::var(n, 0) * MPoly::var(n, j + 1) - MPoly::var(n, 1) * MPoly::var(n, j));
    return qs;
}

/// Endomorphism tube with the Euler field: fields phi^0, phi^1.
inline TubeDatum endo_tube(const QMatrix& phi, const QVec& a) { return make_tube(phi, 2, a); }

inline TubeDatum ip(int m)
{
    if (m < 2)
        throw invalid_input("IP needs m >= 2");
    TubeDatum td = endo_tube(raise(m), unit_vec<Rational>(static_cast<std::size_t>(m) + 1, 0));
    td.witnesses = rational_normal_quadrics(m);
    return td;
}

/// Affine fields zeta_1 = sum j z_j d_j and d_1 + sum_{j >= 2} j z_{j-1} d_j on R^m, base e_1.
inline TubeDatum ku(int m)
{
    if (m < 3)
        throw invalid_input("KU needs m >= 3");
    std::size_t n = static_cast<std::size_t>(m);
    QMatrix z(n, n), x(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        z(j, j) = static_cast<long>(j + 1);
        if (j > 0)
            x(j, j - 1) = static_cast<long>(j + 1);
    }
    TubeDatum td{n, unit_vec<Rational>(n, 0), {linear_field(z), AffineField{x, unit_vec<Rational>(n, 0)}}, {}};
    return td;
}

/// Tangent developable of the twisted cubic (t, t^2, t^3).
inline MPoly tangent_developable()
{
    MPoly p(3);
    p.add_term({2, 2, 0}, -3);
    p.add_term({3, 0, 1}, 4);
    p.add_term({0, 3, 0}, 4);
    p.add_term({1, 1, 1}, -6);
    p.add_term({0, 0, 2}, 1);
    return p;
}

inline TubeDatum ev()
{
    TubeDatum td = ku(3);
    td.witnesses.push_back(tangent_developable());
    return td;
}

/// Base points on sum_{j<p} x_j^2 = sum_{j>=p} x_j^2.
inline QVec quadric_point(int p, int q)
{
    if (p == 2 && q == 1)
        return {3, 4, 5};
    if (p == 3 && q == 1)
        return {1, 2, 2, 3};
    if (p == 2 && q == 2)
        return {1, 2, 2, 1};
    if (p == 4 && q == 1)
        return {1, 1, 1, 1, 2};
    if (p == 3 && q == 2)
        return {1, 2, 2, Rational(9, 5), Rational(12, 5)};
    throw invalid_input("no stored base point for this quadric cone");
}

inline MPoly quadric_form(int p, int q)
{
    std::size_t n = static_cast<std::size_t>(p + q);
    MPoly f(n);
    for (std::size_t j = 0; j < n; ++j)
        f = f + MPoly::var(n, j) * MPoly::var(n, j) * Rational(static_cast<int>(j) < p ? 1 : -1);
    return f;
}

/// Euler field plus so(p, q) generators, chosen greedily.
inline TubeDatum qc(int p, int q)
{
    if (p < q || q < 1 || p + q < 3)
        throw invalid_input("QC needs p >= q >= 1 and p + q >= 3");
    std::size_t n = static_cast<std::size_t>(p + q);
    QVec a = quadric_point(p, q);
    std::vector<AffineField> cands{linear_field(QMatrix::identity(n))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            QMatrix g(n, n);
            bool same = (static_cast<int>(i) < p) == (static_cast<int>(j) < p);
            g(i, j) = 1;
            g(j, i) = same ? -1 : 1;
            cands.push_back(linear_field(g));
        }
    return TubeDatum{n, a, greedy_fields(a, cands), {quadric_form(p, q)}};
}

// ---- CR-algebras

inline CVec l5(Gaussian z, Gaussian x, Gaussian xb, Gaussian y, Gaussian yb) { return {z, x, xb, y, yb}; }

/// Case AI with gamma = beta_4 / 3.
inline CRAlgebra gu(const Rational& gamma)
{
    if (gamma == 0)
        throw invalid_input("GU needs gamma != 0");
    Rational g2 = 2 * gamma * gamma;
    perfect::Table t{l5(1, 0, 0, Gaussian(-g2), Gaussian(g2)),
                     l5(0, 2, 1, Gaussian(0, -2 * gamma), Gaussian(0, 3 * gamma)),
                     l5(0, 0, 0, 1, -1),
                     l5(0, -1, 0, Gaussian(0, -gamma), 0),
                     l5(Gaussian(0, -3 * gamma), 0, 0, 0, 0),
                     l5(3, 0, 0, 0, 0)};
    return perfect::build(t);
}

/// Case C.
inline CRAlgebra gx(const Rational& beta4, const Rational& gamma)
{
    Gaussian b3(-beta4, gamma);
    Gaussian a2((3 * beta4 * beta4 + gamma * gamma) / 4, -gamma * beta4 / 2);
    perfect::Table t{l5(1, Gaussian(beta4), Gaussian(-beta4), a2, -conj(a2)),
                     l5(0, -1, 1, b3, Gaussian(beta4)),
                     l5(0, 0, 0, 1, -1),
                     l5(0, 2, 0, Gaussian(beta4, -gamma), 0),
                     l5(Gaussian(3 * beta4 / 2, -3 * gamma / 2), 0, 0, 0, 0),
                     l5(-3, 0, 0, 0, 0)};
    return perfect::build(t);
}

/// Case AII; contains a copy of sl(2, C).
inline CRAlgebra aii(const Rational& beta4)
{
    if (beta4 == 0)
        throw invalid_input("AII needs beta_4 != 0");
    perfect::Table t{l5(1, 0, 0, 0, 0),
                     l5(0, 0, 1, 0, Gaussian(beta4)),
                     l5(0, 0, 0, 1, -1),
                     l5(0, 1, 0, Gaussian(beta4), 0),
                     l5(Gaussian(beta4), 0, 0, 0, 0),
                     l5(-1, 0, 0, 0, 0)};
    return perfect::build(t);
}

/// e+, h, e- of the sl(2, C) inside AII, in coordinates over the real basis.
inline std::array<CVec, 3> aii_sl2_triple(const Rational& beta4)
{
    Rational b = beta4;
    CVec ep = l5(0, 0, 0, 1, -1);
    CVec h = scale(Gaussian(-1 / b), l5(0, 1, 1, Gaussian(b - 1), Gaussian(b + 1)));
    CVec em = scale(Gaussian(1 / (4 * b * b)),
                    l5(2, Gaussian(2 - 2 * b), Gaussian(2 + 2 * b), Gaussian(-(1 - b) * (1 - b)), Gaussian((1 + b) * (1 + b))));
    return {perfect::real_coords(ep), perfect::real_coords(h), perfect::real_coords(em)};
}

/// sl(2, R) x r with basis H, E, F, x, z and [x, z] = z.
inline RealLieAlgebra sl2r_times_r()
{
    RealLieAlgebra g(5);
    g.labels = {"H", "E", "F", "x", "z"};
    g.set_bracket(0, 1, {0, 2, 0, 0, 0});
    g.set_bracket(0, 2, {0, 0, -2, 0, 0});
    g.set_bracket(1, 2, {1, 0, 0, 0, 0});
    g.set_bracket(3, 4, {0, 0, 0, 0, 1});
    return g;
}

/// q = C(h, 2x + mu z) + C(e, nu z) with h = -iE + iF and e = nu (H + iE + iF) / 2.
inline CRAlgebra fq(const Gaussian& mu, const Gaussian& nu)
{
    if (mu.im != 2 && mu.im != -2)
        throw invalid_input("FQ needs Im(mu) = +-2");
    if (nu.re * nu.re + nu.im * nu.im != 1 || (nu.re != 0 && nu.im != 0))
        throw invalid_input("FQ needs nu in {1, -1, i, -i}");
    Gaussian i = Gaussian::i(), half(Rational(1, 2));
    CRAlgebra cra{sl2r_times_r(), {}};
    cra.q_basis.push_back({0, -i, i, 2, mu});
    cra.q_basis.push_back({nu * half, nu * i * half, nu * i * half, 0, nu});
    return cra;
}

/// [h, e] = 2e, [h, f] = -2f, [e, f] = h on basis h, e, f.
inline RealLieAlgebra sl2()
{
    RealLieAlgebra g(3);
    g.labels = {"h", "e", "f"};
    g.set_bracket(0, 1, {0, 2, 0});
    g.set_bracket(0, 2, {0, 0, -2});
    g.set_bracket(1, 2, {1, 0, 0});
    return g;
}

/// [p, q] = c on basis p, q, c.
inline RealLieAlgebra heisenberg()
{
    RealLieAlgebra g(3);
    g.labels = {"p", "q", "c"};
    g.set_bracket(0, 1, {0, 0, 1});
    return g;
}

} // namespace crtube::families
