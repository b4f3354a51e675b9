/**
 * @file cralgebra.hpp
 * @brief Real Lie algebras by structure constants and CR-algebras (g, q).
 *
 * The complexification l = g (x) C is C^n over the basis of g, and sigma is
 * entrywise conjugation. Every subspace is kept in canonical echelon form.
 */
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "exact/matrix.hpp"
#include "exact/subspace.hpp"
#include "tube.hpp"

namespace crtube {

/// [b_i, b_j] = sum_k c(i, j)_k b_k.
class RealLieAlgebra {
public:
    RealLieAlgebra() = default;
    explicit RealLieAlgebra(std::size_t n) : n_(n), c_(n * n, QVec(n)) {}

    std::size_t dim() const { return n_; }
    std::vector<std::string> labels;

    const QVec& structure(std::size_t i, std::size_t j) const { return c_.at(i * n_ + j); }

    /// Sets [b_i, b_j] = v and [b_j, b_i] = -v.
    void set_bracket(std::size_t i, std::size_t j, const QVec& v)
    {
        if (i >= n_ || j >= n_ || v.size() != n_)
            throw dimension_error("structure constant index or length out of range");
        if (i == j) {
            if (!is_zero_vec(v))
                throw invalid_input("[b_i, b_i] must vanish");
            return;
        }
        c_[i * n_ + j] = v;
        c_[j * n_ + i] = scale(Rational(-1), v);
    }

    template <class T>
    Vec<T> bracket(const Vec<T>& x, const Vec<T>& y) const
    {
        if (x.size() != n_ || y.size() != n_)
            throw dimension_error("bracket arguments have wrong length");
        Vec<T> out(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (crtube::is_zero(x[i]))
                continue;
            for (std::size_t j = 0; j < n_; ++j) {
                if (crtube::is_zero(y[j]) || i == j)
                    continue;
                T xy = x[i] * y[j];
                const QVec& c = structure(i, j);
                for (std::size_t k = 0; k < n_; ++k)
                    if (c[k] != 0)
                        out[k] += xy * T(c[k]);
            }
        }
        return out;
    }

    /// Matrix of y -> [x, y].
    template <class T>
    Matrix<T> ad(const Vec<T>& x) const
    {
        std::vector<Vec<T>> cols;
        for (std::size_t j = 0; j < n_; ++j)
            cols.push_back(bracket(x, unit_vec<T>(n_, j)));
        return Matrix<T>::from_columns(cols, n_);
    }

    QMatrix ad_basis(std::size_t i) const { return ad(unit_vec<Rational>(n_, i)); }

private:
    std::size_t n_ = 0;
    std::vector<QVec> c_;
};

inline RealLieAlgebra abelian(std::size_t n) { return RealLieAlgebra(n); }

struct JacobiResult {
    bool holds = true;
    std::optional<std::array<std::size_t, 3>> triple;
};

inline JacobiResult jacobi_check(const RealLieAlgebra& g)
{
    std::size_t n = g.dim();
    auto e = [n](std::size_t i) { return unit_vec<Rational>(n, i); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                QVec s = g.bracket(e(i), g.structure(j, k)) + g.bracket(e(j), g.structure(k, i)) +
                         g.bracket(e(k), g.structure(i, j));
                if (!is_zero_vec(s))
                    return {false, std::array<std::size_t, 3>{i, j, k}};
            }
    return {};
}

/// Span of [u, w] for u in a, w in b.
template <class T>
Subspace<T> bracket_span(const RealLieAlgebra& g, const Subspace<T>& a, const Subspace<T>& b)
{
    std::vector<Vec<T>> vs;
    for (const auto& u : a.basis())
        for (const auto& w : b.basis())
            vs.push_back(g.bracket(u, w));
    return Subspace<T>::span(g.dim(), vs);
}

template <class T>
bool is_subalgebra(const RealLieAlgebra& g, const Subspace<T>& s)
{
    return s.contains(bracket_span(g, s, s));
}

inline QSubspace whole(const RealLieAlgebra& g) { return QSubspace::full(g.dim()); }

inline std::vector<QSubspace> derived_series(const RealLieAlgebra& g)
{
    std::vector<QSubspace> out{whole(g)};
    for (;;) {
        QSubspace next = bracket_span(g, out.back(), out.back());
        if (next == out.back())
            return out;
        out.push_back(std::move(next));
    }
}

inline std::vector<QSubspace> lower_central_series(const RealLieAlgebra& g)
{
    std::vector<QSubspace> out{whole(g)};
    for (;;) {
        QSubspace next = bracket_span(g, whole(g), out.back());
        if (next == out.back())
            return out;
        out.push_back(std::move(next));
    }
}

inline bool is_solvable(const RealLieAlgebra& g) { return derived_series(g).back().is_zero(); }
inline bool is_nilpotent(const RealLieAlgebra& g) { return lower_central_series(g).back().is_zero(); }

/// Centralizer of s in g.
inline QSubspace centralizer(const RealLieAlgebra& g, const QSubspace& s)
{
    QSubspace out = whole(g);
    for (const auto& y : s.basis())
        out = intersect(out, kernel(g.ad(y)));
    return out;
}

inline QSubspace center(const RealLieAlgebra& g) { return centralizer(g, whole(g)); }

/// h_{k+1} = { x in h_k : [g, x] in h_k }.
inline QSubspace largest_ideal_in(const RealLieAlgebra& g, const QSubspace& s)
{
    if (s.ambient() != g.dim())
        throw dimension_error("subspace does not live in g");
    QSubspace h = s;
    for (;;) {
        QSubspace next = h;
        for (std::size_t i = 0; i < g.dim(); ++i)
            next = intersect(next, preimage(g.ad_basis(i), h));
        if (next == h)
            return h;
        h = std::move(next);
    }
}

/// Smallest subalgebra containing s.
inline QSubspace generated_subalgebra(const RealLieAlgebra& g, const QSubspace& s)
{
    QSubspace w = s;
    for (;;) {
        QSubspace next = sum(w, bracket_span(g, w, w));
        if (next == w)
            return w;
        w = std::move(next);
    }
}

namespace detail {

inline bool ad_nilpotent(const QMatrix& m)
{
    QMatrix p = m;
    for (std::size_t k = 1; k < m.rows(); ++k)
        p = p * m;
    return p.is_zero();
}

} // namespace detail

/// {x : tr(ad x . b) = 0 for b in the unital associative algebra generated by ad g}.
/// For solvable g this is the set of ad-nilpotent elements; the result is checked.
inline QSubspace nilradical_solvable(const RealLieAlgebra& g)
{
    if (!is_solvable(g))
        throw precondition_error("nilradical computation needs a solvable algebra");
    std::size_t n = g.dim();
    std::vector<QMatrix> ads;
    for (std::size_t i = 0; i < n; ++i)
        ads.push_back(g.ad_basis(i));
    std::vector<QMatrix> words{QMatrix::identity(n)};
    QSubspace span = QSubspace::span(n * n, {words[0].data()});
    for (std::size_t k = 0; k < words.size(); ++k)
        for (const auto& a : ads) {
            QMatrix w = words[k] * a;
            if (span.contains(w.data()))
                continue;
            span = sum(span, QSubspace::span(n * n, {w.data()}));
            words.push_back(std::move(w));
        }
    QMatrix rows(words.size(), n);
    for (std::size_t r = 0; r < words.size(); ++r)
        for (std::size_t i = 0; i < n; ++i)
            rows(r, i) = (ads[i] * words[r]).trace();
    QSubspace nil = kernel(rows);
    if (!nil.contains(bracket_span(g, whole(g), whole(g))))
        throw std::logic_error("nilradical check failed: [g,g] not contained");
    if (!whole(g).contains(nil) || !nil.contains(bracket_span(g, whole(g), nil)))
        throw std::logic_error("nilradical check failed: not an ideal");
    for (const auto& x : nil.basis())
        if (!detail::ad_nilpotent(g.ad(x)))
            throw std::logic_error("nilradical check failed: element not ad-nilpotent");
    return nil;
}

/// Center of the nilradical.
inline QSubspace nilcenter_solvable(const RealLieAlgebra& g)
{
    QSubspace nil = nilradical_solvable(g);
    return intersect(nil, centralizer(g, nil));
}

struct CRAlgebra {
    RealLieAlgebra g;
    std::vector<CVec> q_basis;

    CSubspace q() const { return CSubspace::span(g.dim(), q_basis); }
};

inline void validate(const CRAlgebra& cra)
{
    std::size_t n = cra.g.dim();
    for (const auto& v : cra.q_basis)
        if (v.size() != n)
            throw invalid_input("q basis vector has wrong length");
    auto rs = jacobi_check(cra.g);
    if (!rs.holds) {
        auto [i, j, k] = *rs.triple;
        throw invalid_input("Jacobi identity fails on basis triple (" + std::to_string(i) + ", " +
                            std::to_string(j) + ", " + std::to_string(k) + ")");
    }
    CSubspace q = cra.q();
    if (q.dim() != cra.q_basis.size())
        throw invalid_input("q basis is linearly dependent");
    if (!is_subalgebra(cra.g, q))
        throw invalid_input("q is not closed under the bracket");
}

struct QChain {
    std::vector<CSubspace> stages;  // q^(0) = q, q^(1) = f, ... up to the first repeat
    CSubspace q_inf;                // q cap sigma q
    bool reaches_inf = true;
};

/// q^(k+1) = { w in q^(k) : [w, sigma q] in q^(k) + sigma q }.
inline QChain q_chain(const CRAlgebra& cra)
{
    validate(cra);
    CSubspace q = cra.q();
    CSubspace sq = conj(q);
    std::vector<CMatrix> ads;
    for (const auto& v : sq.basis())
        ads.push_back(cra.g.ad(v));
    QChain c;
    c.q_inf = intersect(q, sq);
    c.stages.push_back(q);
    for (;;) {
        const CSubspace& cur = c.stages.back();
        CSubspace target = sum(cur, sq);
        CSubspace next = cur;
        for (const auto& a : ads)
            next = intersect(next, preimage(a, target));
        if (next == cur) {
            c.reaches_inf = cur == c.q_inf;
            return c;
        }
        c.stages.push_back(std::move(next));
    }
}

/// Smallest k with q^(k) = q^(inf); nullopt when the chain stops above q^(inf).
inline std::optional<int> nondegeneracy_degree_alg(const CRAlgebra& cra)
{
    auto c = q_chain(cra);
    if (!c.reaches_inf)
        return std::nullopt;
    for (std::size_t k = 0; k < c.stages.size(); ++k)
        if (c.stages[k] == c.q_inf)
            return static_cast<int>(k);
    return std::nullopt;
}

struct CRSpaces {
    QSubspace g0, h, f_real;  // real: g0, H, F
    CSubspace l0, f, q;       // complex
};

inline CRSpaces spaces(const CRAlgebra& cra, const QChain& c)
{
    CRSpaces s;
    s.q = c.stages.front();
    s.l0 = c.q_inf;
    s.f = c.stages.size() > 1 ? c.stages[1] : c.stages[0];
    s.g0 = real_points(s.l0);
    s.h = real_points(sum(s.q, conj(s.q)));
    s.f_real = real_points(sum(s.f, conj(s.f)));
    (void)cra;
    return s;
}

inline CRSpaces spaces(const CRAlgebra& cra) { return spaces(cra, q_chain(cra)); }

struct ConditionReport {
    std::size_t dim_g = 0, dim_g0 = 0, dim_l0 = 0, dim_f = 0, dim_q = 0, dim_h = 0, dim_f_real = 0;
    bool i_dims = false, ii_brackets = false, iii_not_levi_flat = false, iv_levi_degenerate = false,
         v_two_nondegenerate = false;
    bool effective = false, minimal_generation = false, solvable = false;
    std::optional<int> k;
};

inline ConditionReport condition_report(const CRAlgebra& cra)
{
    auto c = q_chain(cra);
    auto s = spaces(cra, c);
    const auto& g = cra.g;
    ConditionReport r;
    r.dim_g = g.dim();
    r.dim_g0 = s.g0.dim();
    r.dim_l0 = s.l0.dim();
    r.dim_f = s.f.dim();
    r.dim_q = s.q.dim();
    r.dim_h = s.h.dim();
    r.dim_f_real = s.f_real.dim();
    r.i_dims = r.dim_f_real == r.dim_g0 + 2 && r.dim_h == r.dim_f_real + 2 && r.dim_g == r.dim_h + 1 &&
               r.dim_f == r.dim_l0 + 1 && r.dim_q == r.dim_f + 1;
    r.ii_brackets = s.f_real.contains(bracket_span(g, s.g0, s.f_real)) &&
                    s.f_real.contains(bracket_span(g, s.f_real, s.f_real)) &&
                    s.h.contains(bracket_span(g, s.f_real, s.h));
    CSubspace sq = conj(s.q);
    CSubspace q_sq = sum(s.q, sq);
    r.iii_not_levi_flat = !q_sq.contains(bracket_span(g, s.q, sq));
    CSubspace f_sq = bracket_span(g, s.f, sq);
    r.iv_levi_degenerate = q_sq.contains(f_sq) && s.f != s.l0;
    r.v_two_nondegenerate = !sum(s.f, sq).contains(f_sq);
    r.effective = largest_ideal_in(g, real_points(s.q)).is_zero();
    r.minimal_generation = generated_subalgebra(g, s.h).dim() == g.dim();
    r.solvable = is_solvable(g);
    if (c.reaches_inf)
        for (std::size_t k = 0; k < c.stages.size() && !r.k; ++k)
            if (c.stages[k] == c.q_inf)
                r.k = static_cast<int>(k);
    return r;
}

/// g = span(fields) + i R^n by translations; q = isotropy at a.
inline CRAlgebra tube_to_cralgebra(const TubeDatum& td)
{
    tangent_space(td);
    std::size_t n = td.n, m = td.fields.size(), dim = m + n;
    auto flat = [n](const AffineField& f) {
        QVec v = f.linear.data();
        v.insert(v.end(), f.translation.begin(), f.translation.end());
        return v;
    };
    std::vector<QVec> cols;
    for (const auto& f : td.fields)
        cols.push_back(flat(f));
    QMatrix fm = QMatrix::from_columns(cols, n * n + n);
    CRAlgebra cra{RealLieAlgebra(dim), {}};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            QVec c;
            if (!solve(fm, flat(bracket(td.fields[i], td.fields[j])), c))
                throw invalid_input("field span is not closed under the bracket (fields " + std::to_string(i) +
                                    ", " + std::to_string(j) + ")");
            QVec v(dim);
            std::copy(c.begin(), c.end(), v.begin());
            cra.g.set_bracket(i, j, v);
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            QVec v(dim);
            for (std::size_t r = 0; r < n; ++r)
                v[m + r] = -td.fields[i].linear(r, k);
            cra.g.set_bracket(i, m + k, v);
        }
    for (std::size_t j = 0; j < m; ++j) {
        CVec w(dim);
        w[j] = Gaussian(1);
        QVec val = td.fields[j](td.a);
        for (std::size_t k = 0; k < n; ++k)
            w[m + k] = Gaussian(0, val[k]);
        cra.q_basis.push_back(w);
    }
    for (std::size_t i = 0; i < m; ++i)
        cra.g.labels.push_back("xi" + std::to_string(i));
    for (std::size_t k = 0; k < n; ++k)
        cra.g.labels.push_back("tau" + std::to_string(k));
    return cra;
}

namespace perfect {

// Basis of l: z, x, xbar, y, ybar with sigma z = -z.
enum : std::size_t { Z = 0, X = 1, XB = 2, Y = 3, YB = 4 };

/// Bracket data [x,xb], [x,yb], [y,yb], [y,x], [z,x], [z,y] in l coordinates.
struct Table {
    CVec x_xb, x_yb, y_yb, y_x, z_x, z_y;
};

inline CVec sigma(const CVec& v)
{
    CVec out(5);
    out[Z] = -conj(v[Z]);
    out[XB] = conj(v[X]);
    out[X] = conj(v[XB]);
    out[YB] = conj(v[Y]);
    out[Y] = conj(v[YB]);
    return out;
}

inline CVec neg(const CVec& v) { return scale(Gaussian(-1), v); }

/// Columns are g1 = iz, g2 = x + xb, g3 = i(x - xb), g4 = y + yb, g5 = i(y - yb) in l coordinates.
inline CMatrix change_of_basis()
{
    Gaussian i = Gaussian::i();
    CMatrix p(5, 5);
    p(Z, 0) = i;
    p(X, 1) = 1;
    p(XB, 1) = 1;
    p(X, 2) = i;
    p(XB, 2) = -i;
    p(Y, 3) = 1;
    p(YB, 3) = 1;
    p(Y, 4) = i;
    p(YB, 4) = -i;
    return p;
}

/// Coordinates over the real basis g1..g5 of an element given in z, x, xb, y, yb coordinates.
inline CVec real_coords(const CVec& l) { return inverse(change_of_basis()) * l; }

/// Real algebra on g1 = iz, g2 = x + xb, g3 = i(x - xb), g4 = y + yb, g5 = i(y - yb); q = span{x, y}.
inline CRAlgebra build(const Table& t)
{
    std::vector<std::vector<CVec>> c(5, std::vector<CVec>(5, CVec(5)));
    auto put = [&](std::size_t i, std::size_t j, const CVec& v) {
        c[i][j] = v;
        c[j][i] = neg(v);
    };
    put(X, XB, t.x_xb);
    put(X, YB, t.x_yb);
    put(Y, YB, t.y_yb);
    put(Y, X, t.y_x);
    put(Z, X, t.z_x);
    put(Z, Y, t.z_y);
    put(XB, Y, sigma(t.x_yb));
    put(XB, YB, sigma(neg(t.y_x)));
    put(Z, XB, neg(sigma(t.z_x)));
    put(Z, YB, neg(sigma(t.z_y)));
    CMatrix p = change_of_basis();
    CMatrix pinv = inverse(p);
    CRAlgebra cra{RealLieAlgebra(5), {}};
    cra.g.labels = {"iz", "x+xb", "i(x-xb)", "y+yb", "i(y-yb)"};
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = a + 1; b < 5; ++b) {
            CVec v(5);
            for (std::size_t r = 0; r < 5; ++r)
                for (std::size_t s = 0; s < 5; ++s) {
                    Gaussian w = p(r, a) * p(s, b);
                    if (!is_zero(w))
                        v = v + scale(w, c[r][s]);
                }
            CVec coords = pinv * v;
            QVec real(5);
            for (std::size_t k = 0; k < 5; ++k) {
                if (!is_real(coords[k]))
                    throw invalid_input("bracket table is not compatible with sigma");
                real[k] = coords[k].re;
            }
            cra.g.set_bracket(a, b, real);
        }
    cra.q_basis = {pinv.col(X), pinv.col(Y)};
    return cra;
}

} // namespace perfect

} // namespace crtube
