/**
 * @file tube.hpp
 * @brief Affine geometry of locally homogeneous submanifolds F of R^n.
 *
 * A TubeDatum lists affine vector fields tangent to F whose values at the
 * base point a form a basis of T_aF. Everything here is exact.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exact/matrix.hpp"
#include "exact/polynomial.hpp"
#include "exact/subspace.hpp"

namespace crtube {

/// x -> linear * x + translation.
struct AffineField {
    QMatrix linear;
    QVec translation;

    QVec operator()(const QVec& x) const { return linear * x + translation; }
};

/// Vector field bracket [X, Y] = DY.X - DX.Y on affine fields.
inline AffineField bracket(const AffineField& x, const AffineField& y)
{
    return {y.linear * x.linear - x.linear * y.linear, y.linear * x.translation - x.linear * y.translation};
}

struct TubeDatum {
    std::size_t n = 0;
    QVec a;
    std::vector<AffineField> fields;
    std::vector<MPoly> witnesses;
};

/// Shape checks only; independence is checked by tangent_space.
inline void validate(const TubeDatum& td)
{
    if (td.a.size() != td.n)
        throw invalid_input("base point has length " + std::to_string(td.a.size()) + ", expected " +
                            std::to_string(td.n));
    for (std::size_t k = 0; k < td.fields.size(); ++k) {
        const auto& f = td.fields[k];
        if (f.linear.rows() != td.n || f.linear.cols() != td.n || f.translation.size() != td.n)
            throw invalid_input("field " + std::to_string(k) + " does not act on R^" + std::to_string(td.n));
    }
    for (const auto& p : td.witnesses)
        if (p.nvars() != td.n)
            throw invalid_input("witness polynomial has wrong variable count");
}

inline std::vector<QVec> field_values(const TubeDatum& td)
{
    std::vector<QVec> vs;
    for (const auto& f : td.fields)
        vs.push_back(f(td.a));
    return vs;
}

inline QSubspace tangent_space(const TubeDatum& td)
{
    validate(td);
    auto t = QSubspace::span(td.n, field_values(td));
    if (t.dim() != td.fields.size())
        throw invalid_input("field values at the base point are linearly dependent");
    return t;
}

struct KernelChain {
    enum class Verdict { degree, stabilized_nonzero };

    std::vector<QSubspace> spaces;
    Verdict verdict = Verdict::degree;
    int degree = 0;  // meaningful only for Verdict::degree
};

/// K^{r+1} = { v in K^r : xi^lin v in K^r for every field xi }.
inline KernelChain kernel_chain(const TubeDatum& td)
{
    KernelChain c;
    c.spaces.push_back(tangent_space(td));
    for (;;) {
        const QSubspace& k = c.spaces.back();
        if (k.is_zero()) {
            c.degree = static_cast<int>(c.spaces.size()) - 1;
            return c;
        }
        QSubspace next = k;
        for (const auto& f : td.fields)
            next = intersect(next, preimage(f.linear, k));
        bool stable = next == k;
        c.spaces.push_back(std::move(next));
        if (stable) {
            c.verdict = KernelChain::Verdict::stabilized_nonzero;
            return c;
        }
    }
}

/// k, or nullopt when the chain stabilizes at a nonzero space.
inline std::optional<int> degeneracy_degree(const TubeDatum& td)
{
    auto c = kernel_chain(td);
    if (c.verdict == KernelChain::Verdict::stabilized_nonzero)
        return std::nullopt;
    return c.degree;
}

enum class Minimality { holds, inconclusive };

struct MinimalityResult {
    Minimality verdict;
    QSubspace closure;
};

/// Closure of T_aF under all linear parts; full closure is sufficient for minimality.
inline MinimalityResult is_minimal_sufficient(const TubeDatum& td)
{
    QSubspace w = tangent_space(td);
    for (;;) {
        QSubspace next = w;
        for (const auto& f : td.fields)
            next = sum(next, push_forward(f.linear, w));
        if (next == w)
            break;
        w = std::move(next);
    }
    return {w.dim() == td.n ? Minimality::holds : Minimality::inconclusive, w};
}

struct LeviValue {
    QVec representative;                 // zero on the pivot coordinates of T_aF
    std::vector<std::size_t> complement; // non-pivot coordinates
    QVec quotient;                       // representative restricted to complement

    bool is_zero() const { return is_zero_vec(quotient); }
};

/// Coefficients c with v = sum c_j xi_j(a).
inline QVec field_coordinates(const TubeDatum& td, const QVec& v)
{
    auto vals = field_values(td);
    QMatrix m = QMatrix::from_columns(vals, td.n);
    QVec c;
    if (!solve(m, v, c))
        throw precondition_error("vector is not tangent at the base point");
    return c;
}

inline LeviValue reduce_normal(const QSubspace& t, const QVec& u)
{
    LeviValue out;
    out.representative = t.reduce(u);
    std::vector<bool> piv(t.ambient(), false);
    for (auto p : t.pivots())
        piv[p] = true;
    for (std::size_t j = 0; j < t.ambient(); ++j)
        if (!piv[j]) {
            out.complement.push_back(j);
            out.quotient.push_back(out.representative[j]);
        }
    return out;
}

inline LeviValue levi_form(const TubeDatum& td, const QVec& v, const QVec& w)
{
    QSubspace t = tangent_space(td);
    if (v.size() != td.n || w.size() != td.n)
        throw dimension_error("Levi form arguments have wrong length");
    if (!t.contains(v) || !t.contains(w))
        throw precondition_error("Levi form arguments must be tangent");
    QVec c = field_coordinates(td, v);
    QVec u(td.n);
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0)
            u = u + scale(c[j], td.fields[j].linear * w);
    return reduce_normal(t, u);
}

/// L p = sum_j xi(x)_j dp/dx_j.
inline MPoly lie_derivative(const MPoly& p, const AffineField& xi)
{
    std::size_t n = xi.translation.size();
    if (p.nvars() != n)
        throw dimension_error("polynomial and field live in different dimensions");
    MPoly out(n);
    for (std::size_t j = 0; j < n; ++j) {
        MPoly comp = MPoly::constant(n, xi.translation[j]);
        for (std::size_t k = 0; k < n; ++k)
            if (xi.linear(j, k) != 0)
                comp = comp + MPoly::var(n, k) * xi.linear(j, k);
        out = out + comp * p.derivative(j);
    }
    return out;
}

/// True iff p divides L p exactly.
inline bool invariance_witness(const MPoly& p, const AffineField& xi)
{
    return p.divides(lie_derivative(p, xi));
}

namespace detail {

inline void monomials_of_degree(std::size_t n, int d, Exponents& cur, std::size_t j, std::vector<Exponents>& out)
{
    if (j + 1 == n) {
        cur[j] = d;
        out.push_back(cur);
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur[j] = e;
        monomials_of_degree(n, d - e, cur, j + 1, out);
    }
}

// Whether f (homogeneous) lies in the degree-deg(f) part of the ideal generated by homogeneous gens.
inline bool in_graded_ideal(const std::vector<MPoly>& gens, const MPoly& f)
{
    if (f.is_zero())
        return true;
    std::size_t n = f.nvars();
    int d = f.total_degree();
    std::vector<MPoly> products;
    for (const auto& g : gens) {
        int e = d - g.total_degree();
        if (e < 0 || g.is_zero())
            continue;
        std::vector<Exponents> ms;
        Exponents cur(n, 0);
        if (n > 0)
            monomials_of_degree(n, e, cur, 0, ms);
        for (const auto& m : ms) {
            MPoly mono(n);
            mono.add_term(m, 1);
            products.push_back(mono * g);
        }
    }
    std::map<Exponents, std::size_t> index;
    auto slot = [&](const Exponents& e) { return index.try_emplace(e, index.size()).first->second; };
    for (const auto& p : products)
        for (const auto& t : p.terms())
            slot(t.first);
    for (const auto& t : f.terms())
        slot(t.first);
    QMatrix m(index.size(), products.size());
    QVec rhs(index.size());
    for (std::size_t k = 0; k < products.size(); ++k)
        for (const auto& [e, c] : products[k].terms())
            m(index[e], k) = c;
    for (const auto& [e, c] : f.terms())
        rhs[index[e]] = c;
    QVec x;
    return solve(m, rhs, x);
}

inline bool is_homogeneous(const MPoly& p) { return p.homogeneous_parts().size() <= 1; }

} // namespace detail

/// Zero-set invariance for a system of homogeneous equations: every L p_i lies in the ideal.
/// Exact for homogeneous generators; each graded piece is tested separately.
inline bool ideal_invariance(const std::vector<MPoly>& ps, const AffineField& xi)
{
    for (const auto& p : ps)
        if (!detail::is_homogeneous(p))
            throw precondition_error("ideal invariance requires homogeneous generators");
    for (const auto& p : ps)
        for (const auto& [deg, part] : lie_derivative(p, xi).homogeneous_parts())
            if (!detail::in_graded_ideal(ps, part))
                return false;
    return true;
}

inline bool conical_check(const TubeDatum& td) { return tangent_space(td).contains(td.a); }

/// Levi kernel of {p = 0} at a from the Hessian restricted to ker grad p(a).
inline QSubspace hypersurface_levi_kernel(const MPoly& p, const QVec& a)
{
    std::size_t n = p.nvars();
    if (a.size() != n)
        throw dimension_error("point has wrong length");
    if (p(a) != 0)
        throw precondition_error("point is not on the hypersurface");
    QMatrix grad(1, n), hess(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        MPoly di = p.derivative(i);
        grad(0, i) = di(a);
        for (std::size_t j = 0; j < n; ++j)
            hess(i, j) = di.derivative(j)(a);
    }
    if (grad.is_zero())
        throw precondition_error("singular point: gradient vanishes");
    QSubspace t = kernel(grad);
    QMatrix b = t.basis_matrix();
    QMatrix restricted = b * hess * b.transpose();
    std::vector<QVec> out;
    for (const auto& alpha : null_space(restricted))
        out.push_back(b.transpose() * alpha);
    return QSubspace::span(n, out);
}

/// Transport by x -> g x + h: a -> g a + h, xi -> (g A g^-1, g b - g A g^-1 h).
inline TubeDatum transport(const TubeDatum& td, const QMatrix& g, const QVec& h)
{
    QMatrix gi = inverse(g);
    TubeDatum out{td.n, g * td.a + h, {}, {}};
    for (const auto& f : td.fields) {
        QMatrix l = g * f.linear * gi;
        out.fields.push_back({l, g * f.translation - l * h});
    }
    return out;
}

} // namespace crtube
