/**
 * @file endo.hpp
 * @brief Cyclic endomorphisms, their sigma invariants, moduli and the tubes they generate.
 *
 * Spectral statements are decided through exact identities on the sigma
 * coefficients; no eigenvalue is ever computed. Only invert_modulus and
 * eastwood_ezhov_inverse return floating point values.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "exact/charpoly.hpp"
#include "exact/matrix.hpp"
#include "exact/subspace.hpp"
#include "tube.hpp"

namespace crtube {

inline constexpr std::uint64_t default_cyclic_seed = 0x6379636c6963ULL;

namespace detail {

inline Rational ipow(Rational b, unsigned e)
{
    Rational r(1);
    while (e) {
        if (e & 1)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline void require_square(const QMatrix& m)
{
    if (!m.square())
        throw dimension_error("endomorphism must be square");
}

} // namespace detail

/// Krylov matrix [a, phi a, ..., phi^{n-1} a] has full rank.
inline bool is_cyclic_pair(const QMatrix& phi, const QVec& a)
{
    detail::require_square(phi);
    if (a.size() != phi.rows())
        throw dimension_error("vector length does not match the endomorphism");
    std::size_t n = a.size();
    std::vector<QVec> krylov{a};
    for (std::size_t k = 1; k < n; ++k)
        krylov.push_back(phi * krylov.back());
    return rank(QMatrix::from_columns(krylov, n)) == n;
}

inline bool is_cyclic(const QMatrix& phi)
{
    detail::require_square(phi);
    return minimal_polynomial(phi).degree() == static_cast<int>(phi.rows());
}

/// Unit vectors, then pairwise sums, then seeded random integer vectors.
inline std::optional<QVec> find_cyclic_vector(const QMatrix& phi, std::uint64_t seed = default_cyclic_seed)
{
    if (!is_cyclic(phi))
        return std::nullopt;
    std::size_t n = phi.rows();
    for (std::size_t i = 0; i < n; ++i)
        if (auto v = unit_vec<Rational>(n, i); is_cyclic_pair(phi, v))
            return v;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (auto v = unit_vec<Rational>(n, i) + unit_vec<Rational>(n, j); is_cyclic_pair(phi, v))
                return v;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-10, 10);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        QVec v(n);
        for (auto& x : v)
            x = dist(rng);
        if (is_cyclic_pair(phi, v))
            return v;
    }
    throw std::logic_error("cyclic vector search exhausted");
}

inline QMatrix trace_free(const QMatrix& phi)
{
    detail::require_square(phi);
    std::size_t n = phi.rows();
    if (n == 0)
        return phi;
    return phi - QMatrix::identity(n) * (phi.trace() / static_cast<long>(n));
}

struct SigmaInvariants {
    std::size_t n = 0;
    std::vector<Rational> sigma;  // sigma_2 .. sigma_n

    const Rational& at(std::size_t j) const
    {
        if (j < 2 || j > n)
            throw std::out_of_range("sigma index out of range");
        return sigma[j - 2];
    }
    bool all_zero() const
    {
        for (const auto& s : sigma)
            if (s != 0)
                return false;
        return true;
    }
};

/// chi(X) = X^n + sum_j (-1)^j sigma_j X^{n-j}.
inline SigmaInvariants sigma_invariants(const QMatrix& phi)
{
    detail::require_square(phi);
    if (phi.trace() != 0)
        throw precondition_error("sigma invariants need a trace-free endomorphism");
    std::size_t n = phi.rows();
    UPoly chi = charpoly(phi);
    SigmaInvariants s{n, {}};
    for (std::size_t j = 2; j <= n; ++j) {
        Rational c = chi.coeff(static_cast<int>(n - j));
        s.sigma.push_back(j % 2 ? -c : c);
    }
    return s;
}

/// Elementary symmetric functions of k - (n-1)/2, k = 0..n-1; index j holds c_j.
inline std::vector<Rational> centered_progression_sigmas(std::size_t n)
{
    std::vector<Rational> c{Rational(1)};
    for (std::size_t k = 0; k < n; ++k) {
        Rational r = Rational(static_cast<long>(2 * k) - static_cast<long>(n) + 1, 2);
        std::vector<Rational> next(c.size() + 1);
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j] += c[j];
            next[j + 1] += c[j] * r;
        }
        c = std::move(next);
    }
    return c;
}

namespace detail {

inline bool sigmas_are_progression(const SigmaInvariants& s)
{
    std::size_t n = s.n;
    if (n <= 2)
        return true;
    auto c = centered_progression_sigmas(n);
    for (std::size_t j = 3; j <= n; j += 2)
        if (s.at(j) != 0)
            return false;
    for (std::size_t j = 4; j <= n; j += 2) {
        unsigned k = static_cast<unsigned>(j / 2);
        if (s.at(j) * ipow(c[2], k) != ipow(s.at(2), k) * c[j])
            return false;
    }
    return true;
}

} // namespace detail

/// Eigenvalues, with multiplicity, form an arithmetic progression in C.
inline bool is_arithmetic_progression(const QMatrix& phi)
{
    return detail::sigmas_are_progression(sigma_invariants(trace_free(phi)));
}

inline void require_cyclic(const QMatrix& phi)
{
    detail::require_square(phi);
    if (!is_cyclic(phi))
        throw precondition_error("endomorphism is not cyclic");
}

inline bool general_position(const QMatrix& phi, int d)
{
    require_cyclic(phi);
    int n = static_cast<int>(phi.rows());
    if (d <= 1 || d >= n)
        throw precondition_error("general position needs 1 < d < n");
    if (d == 2)
        return !is_arithmetic_progression(phi);
    return distinct_root_count(charpoly(phi)) > d;
}

struct Modulus {
    bool infinite = false;
    Rational value;

    static Modulus finite(const Rational& v) { return {false, v}; }
    static Modulus infinity() { return {true, Rational(0)}; }

    friend bool operator==(const Modulus& a, const Modulus& b)
    {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
};

inline std::string to_string(const Modulus& m) { return m.infinite ? "inf" : to_string(m.value); }

inline const Rational mu0{27, 4};

namespace detail {

inline SigmaInvariants sigma3(const QMatrix& phi)
{
    detail::require_square(phi);
    if (phi.rows() != 3)
        throw precondition_error("the modulus is defined for n = 3 only");
    require_cyclic(phi);
    return sigma_invariants(trace_free(phi));
}

inline Modulus modulus_of(const SigmaInvariants& s)
{
    if (s.at(3) == 0)
        return Modulus::infinity();
    return Modulus::finite(-ipow(s.at(2), 3) / (s.at(3) * s.at(3)));
}

} // namespace detail

/// -sigma_2^3 / sigma_3^2, infinite when sigma_3 = 0.
inline Modulus modulus(const QMatrix& phi) { return detail::modulus_of(detail::sigma3(phi)); }

enum class Class3 { light_cone, ey, ez, ex };

inline std::string to_string(Class3 c)
{
    switch (c) {
    case Class3::light_cone:
        return "LIGHT_CONE";
    case Class3::ey:
        return "EY";
    case Class3::ez:
        return "EZ";
    case Class3::ex:
        return "EX";
    }
    return "?";
}

struct Classification3 {
    Class3 cls;
    Modulus mu;
};

inline Classification3 classify3(const QMatrix& phi)
{
    auto s = detail::sigma3(phi);
    Modulus mu = detail::modulus_of(s);
    if (mu.infinite)
        return {Class3::light_cone, mu};
    Rational disc = -4 * detail::ipow(s.at(2), 3) - 27 * s.at(3) * s.at(3);
    int side = sign(mu.value - mu0);
    if (side != sign(disc))
        throw std::logic_error("modulus and discriminant disagree");
    Class3 c = side > 0 ? Class3::ex : side == 0 ? Class3::ez : Class3::ey;
    return {c, mu};
}

/// Canonical record of the orbit of (sigma_j) under sigma_j -> r^j sigma_j, r real nonzero.
struct ScaleRecord {
    bool nilpotent = false;
    int j0 = 0;
    std::vector<Rational> ratios;  // I_j = sigma_j^{j0} / sigma_{j0}^j for j0 < j <= n
    std::vector<int> signs;        // even j0 only: even-j signs and odd-j signs up to a global flip

    friend bool operator==(const ScaleRecord& a, const ScaleRecord& b)
    {
        return a.nilpotent == b.nilpotent && a.j0 == b.j0 && a.ratios == b.ratios && a.signs == b.signs;
    }
};

namespace detail {

inline ScaleRecord scale_record(const SigmaInvariants& s)
{
    ScaleRecord r;
    std::size_t n = s.n;
    std::size_t j0 = 0;
    for (std::size_t j = 2; j <= n && !j0; ++j)
        if (s.at(j) != 0)
            j0 = j;
    if (!j0) {
        r.nilpotent = true;
        return r;
    }
    r.j0 = static_cast<int>(j0);
    const Rational& lead = s.at(j0);
    for (std::size_t j = j0 + 1; j <= n; ++j)
        r.ratios.push_back(ipow(s.at(j), static_cast<unsigned>(j0)) / ipow(lead, static_cast<unsigned>(j)));
    if (j0 % 2 == 0) {
        int flip = 0;
        for (std::size_t j = 3; j <= n && !flip; j += 2)
            flip = sign(s.at(j));
        for (std::size_t j = 2; j <= n; ++j)
            r.signs.push_back(j % 2 ? sign(s.at(j)) * flip : sign(s.at(j)));
    }
    return r;
}

// Exists real r != 0 with b_j = r^j a_j for all j.
inline bool scaling_related(const SigmaInvariants& a, const SigmaInvariants& b)
{
    if (a.n != b.n)
        return false;
    std::size_t n = a.n;
    std::size_t j0 = 0;
    for (std::size_t j = 2; j <= n && !j0; ++j)
        if (a.at(j) != 0)
            j0 = j;
    if (!j0)
        return b.all_zero();
    for (std::size_t j = 2; j < j0; ++j)
        if (b.at(j) != 0)
            return false;
    if (b.at(j0) == 0)
        return false;
    Rational t = b.at(j0) / a.at(j0);
    auto e0 = static_cast<unsigned>(j0);
    for (std::size_t j = j0 + 1; j <= n; ++j)
        if (ipow(b.at(j), e0) != ipow(t, static_cast<unsigned>(j)) * ipow(a.at(j), e0))
            return false;
    if (j0 % 2)
        return true;
    if (t <= 0)
        return false;
    for (int s : {1, -1}) {
        bool ok = true;
        for (std::size_t j = 2; j <= n && ok; ++j)
            if (a.at(j) != 0)
                ok = sign(b.at(j)) == ((j % 2) ? s : 1) * sign(a.at(j));
        if (ok)
            return true;
    }
    return false;
}

inline SigmaInvariants cyclic_sigmas(const QMatrix& phi)
{
    require_cyclic(phi);
    return sigma_invariants(trace_free(phi));
}

} // namespace detail

inline ScaleRecord scale_invariants(const QMatrix& phi) { return detail::scale_record(detail::cyclic_sigmas(phi)); }

/// Both progressions, or sigma' is a real rescaling of sigma.
inline bool locally_equivalent(const QMatrix& phi, const QMatrix& psi)
{
    auto a = detail::cyclic_sigmas(phi), b = detail::cyclic_sigmas(psi);
    if (a.n != b.n)
        throw dimension_error("endomorphisms act on different dimensions");
    if (detail::sigmas_are_progression(a) && detail::sigmas_are_progression(b))
        return true;
    return detail::scaling_related(a, b);
}

/// g psi g^-1 = r phi up to trace; for cyclic matrices equal charpolys mean similar.
inline bool globally_equivalent(const QMatrix& phi, const QMatrix& psi)
{
    auto a = detail::cyclic_sigmas(phi), b = detail::cyclic_sigmas(psi);
    if (a.n != b.n)
        throw dimension_error("endomorphisms act on different dimensions");
    return detail::scaling_related(a, b);
}

/// Linear fields x -> phi^k x for 0 <= k < d, based at a.
inline TubeDatum make_tube(const QMatrix& phi, int d, const QVec& a)
{
    detail::require_square(phi);
    std::size_t n = phi.rows();
    if (d <= 1 || d >= static_cast<int>(n))
        throw precondition_error("tube construction needs 1 < d < n");
    if (!is_cyclic_pair(phi, a))
        throw precondition_error("base point is not a cyclic vector");
    TubeDatum td{n, a, {}, {}};
    QMatrix p = QMatrix::identity(n);
    for (int k = 0; k < d; ++k) {
        td.fields.push_back({p, QVec(n)});
        p = p * phi;
    }
    return td;
}

/// 2 when the spectrum is symmetric about its mean, else 1.
inline int stability_order(const QMatrix& phi, int d)
{
    require_cyclic(phi);
    int n = static_cast<int>(phi.rows());
    if (d <= 1 || d >= n)
        throw precondition_error("stability order needs 1 < d < n");
    if (2 * d > n + 1)
        throw precondition_error("stability order needs 2d <= n + 1");
    if (!general_position(phi, d))
        throw precondition_error("stability order needs the spectrum in general position");
    auto s = sigma_invariants(trace_free(phi));
    for (std::size_t j = 3; j <= s.n; j += 2)
        if (s.at(j) != 0)
            return 1;
    return 2;
}

inline int expected_aut_dim(const QMatrix& phi)
{
    auto s = detail::cyclic_sigmas(phi);
    int n = static_cast<int>(s.n);
    if (s.all_zero())
        return n + 3;
    if (n >= 2 && detail::sigmas_are_progression(s)) {
        auto c = centered_progression_sigmas(s.n);
        bool imaginary = sign(s.at(2)) * sign(c[2]) < 0;
        if (imaginary && distinct_root_count(charpoly(phi)) == n)
            return n + 4;
    }
    return n + 2;
}

/// mu = (28 a)^3 / 100.
inline Modulus eastwood_ezhov(const Rational& a) { return Modulus::finite(detail::ipow(28 * a, 3) / 100); }

struct EastwoodEzhovInverse {
    std::optional<Rational> exact;
    double value = 0;
};

namespace detail {

inline std::optional<BigInt> exact_cbrt(const BigInt& x)
{
    if (x < 0) {
        auto r = exact_cbrt(-x);
        if (r)
            return BigInt(-*r);
        return std::nullopt;
    }
    BigInt lo = 0, hi = 1;
    while (hi * hi * hi < x)
        hi *= 2;
    while (lo < hi) {
        BigInt mid = (lo + hi) / 2;
        if (mid * mid * mid < x)
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo * lo * lo == x)
        return lo;
    return std::nullopt;
}

} // namespace detail

inline EastwoodEzhovInverse eastwood_ezhov_inverse(const Rational& mu)
{
    Rational c = 100 * mu;
    auto p = detail::exact_cbrt(num(c));
    auto q = detail::exact_cbrt(den(c));
    EastwoodEzhovInverse out;
    if (p && q) {
        out.exact = Rational(*p, *q) / 28;
        out.value = to_double(*out.exact);
    } else {
        out.value = std::cbrt(to_double(c)) / 28.0;
    }
    return out;
}

/// EY(w): spectrum {i, -i, w}; EX(t): spectrum {0, 1, t}.
inline QMatrix reference_endo(Class3 c, const Rational& x)
{
    QMatrix m(3, 3);
    if (c == Class3::ey) {
        m(0, 1) = -1;
        m(1, 0) = 1;
        m(2, 2) = x;
    } else if (c == Class3::ex) {
        m(1, 1) = 1;
        m(2, 2) = x;
    } else {
        throw precondition_error("reference family exists for EY and EX only");
    }
    return m;
}

struct ModulusInversion {
    double parameter = 0;
    bool multiple_sign_changes = false;
};

inline ModulusInversion invert_modulus(Class3 c, const Rational& target, double tol = 1e-12)
{
    if (c == Class3::ey && target >= mu0)
        throw precondition_error("EY moduli lie below 27/4");
    if (c == Class3::ex && target <= mu0)
        throw precondition_error("EX moduli lie above 27/4");
    if (c != Class3::ey && c != Class3::ex)
        throw precondition_error("only EY and EX carry a parameter");
    Rational offset = c == Class3::ex ? Rational(2) : Rational(0);
    auto f = [&](const Rational& x) {
        Modulus m = modulus(reference_endo(c, x));
        if (m.infinite)
            throw std::logic_error("reference family hit an infinite modulus");
        return Rational(m.value - target);
    };
    std::vector<Rational> grid;
    for (int e = -30; e <= 30; ++e) {
        Rational p = e >= 0 ? Rational(BigInt(1) << e) : Rational(BigInt(1), BigInt(1) << -e);
        grid.push_back(offset + p);
        grid.push_back(offset + p * Rational(3, 2));
    }
    std::sort(grid.begin(), grid.end());
    std::optional<std::pair<Rational, Rational>> bracket;
    std::optional<Rational> hit;
    int changes = 0;
    Rational prev_x = grid.front();
    Rational prev_f = f(prev_x);
    if (prev_f == 0)
        hit = prev_x;
    for (std::size_t k = 1; k < grid.size(); ++k) {
        Rational fx = f(grid[k]);
        if (fx == 0) {
            ++changes;
            if (!hit && !bracket)
                hit = grid[k];
        } else if (prev_f != 0 && sign(fx) != sign(prev_f)) {
            ++changes;
            if (!hit && !bracket)
                bracket = {prev_x, grid[k]};
        }
        prev_x = grid[k];
        prev_f = fx;
    }
    ModulusInversion out;
    out.multiple_sign_changes = changes > 1;
    if (hit) {
        out.parameter = to_double(*hit);
        return out;
    }
    if (!bracket)
        throw out_of_range_error("no bracketing interval for the requested modulus");
    auto [lo, hi] = *bracket;
    int slo = sign(f(lo));
    Rational eps(tol);
    Rational mid = (lo + hi) / 2;
    for (int it = 0; it < 400; ++it) {
        mid = (lo + hi) / 2;
        Rational fm = f(mid);
        if (abs(fm) < eps)
            break;
        if (sign(fm) == slo)
            lo = mid;
        else
            hi = mid;
    }
    out.parameter = to_double(mid);
    return out;
}

} // namespace crtube
