/**
 * @file polynomial.hpp
 * @brief Univariate and multivariate polynomials over the rationals.
 *
 * UPoly stores dense ascending coefficients. MPoly stores a sparse map from
 * exponent tuples to nonzero coefficients; map order is lexicographic, so the
 * last entry is the lex-leading term.
 */
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace crtube {

class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }
    UPoly(const Rational& c) : c_{c} { trim(); }

    static UPoly X() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    /// Builds from descending coefficients, leading first.
    static UPoly from_descending(std::vector<Rational> d)
    {
        std::reverse(d.begin(), d.end());
        return UPoly(std::move(d));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator()(const Rational& x) const
    {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    UPoly derivative() const
    {
        std::vector<Rational> d;
        for (std::size_t k = 1; k < c_.size(); ++k)
            d.push_back(c_[k] * static_cast<long>(k));
        return UPoly(std::move(d));
    }

    UPoly monic() const
    {
        if (c_.empty())
            return *this;
        UPoly p = *this;
        Rational l = lead();
        for (auto& x : p.c_)
            x /= l;
        return p;
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b)
    {
        std::vector<Rational> s(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < s.size(); ++k)
            s[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
        return UPoly(std::move(s));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + b * Rational(-1); }
    friend UPoly operator*(UPoly a, const Rational& s)
    {
        for (auto& x : a.c_)
            x *= s;
        a.trim();
        return a;
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return UPoly();
        std::vector<Rational> p(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                p[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(p));
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    /// Euclidean division a = q b + r with deg r < deg b.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b)
    {
        if (b.is_zero())
            throw std::domain_error("polynomial division by zero");
        std::vector<Rational> r = a.c_;
        int db = b.degree();
        std::vector<Rational> q(std::max(0, a.degree() - db + 1));
        for (int k = a.degree(); k >= db; --k) {
            Rational f = r[k] / b.lead();
            if (f == 0)
                continue;
            q[k - db] = f;
            for (int j = 0; j <= db; ++j)
                r[k - db + j] -= f * b.c_[j];
        }
        return {UPoly(std::move(q)), UPoly(std::move(r))};
    }

    friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
    friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

    std::string to_string(const std::string& var = "X") const
    {
        if (c_.empty())
            return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            const Rational& x = c_[k];
            if (x == 0)
                continue;
            Rational ax = abs(x);
            if (!s.empty())
                s += x < 0 ? " - " : " + ";
            else if (x < 0)
                s += "-";
            bool unit = ax == 1 && k > 0;
            if (!unit)
                s += crtube::to_string(ax);
            if (k > 0) {
                if (!unit)
                    s += "*";
                s += var;
                if (k > 1)
                    s += "^" + std::to_string(k);
            }
        }
        return s;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline UPoly gcd(UPoly a, UPoly b)
{
    while (!b.is_zero()) {
        UPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Yun's algorithm: returns q_1, q_2, ... with p = lead * prod q_i^i, each q_i monic squarefree.
inline std::vector<UPoly> squarefree_decomposition(const UPoly& p)
{
    if (p.is_zero())
        throw std::domain_error("squarefree decomposition of zero polynomial");
    std::vector<UPoly> out;
    UPoly f = p.monic();
    if (f.degree() == 0)
        return out;
    UPoly fp = f.derivative();
    UPoly a = gcd(f, fp);
    UPoly b = f / a;
    UPoly c = fp / a;
    UPoly d = c - b.derivative();
    while (b.degree() > 0) {
        UPoly ai = gcd(b, d);
        out.push_back(ai);
        b = b / ai;
        c = d / ai;
        d = c - b.derivative();
    }
    return out;
}

/// Number of distinct complex roots.
inline int distinct_root_count(const UPoly& p)
{
    if (p.is_zero())
        throw std::domain_error("root count of zero polynomial");
    return p.degree() - gcd(p, p.derivative()).degree();
}

/// multiplicity -> number of distinct roots with that multiplicity.
inline std::map<int, int> multiplicity_profile(const UPoly& p)
{
    std::map<int, int> prof;
    auto qs = squarefree_decomposition(p);
    for (std::size_t i = 0; i < qs.size(); ++i)
        if (qs[i].degree() > 0)
            prof[static_cast<int>(i) + 1] = qs[i].degree();
    return prof;
}

using Exponents = std::vector<int>;

class MPoly {
public:
    MPoly() = default;
    explicit MPoly(std::size_t nvars) : n_(nvars) {}

    static MPoly constant(std::size_t nvars, const Rational& c)
    {
        MPoly p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }

    static MPoly var(std::size_t nvars, std::size_t j)
    {
        Exponents e(nvars, 0);
        e.at(j) = 1;
        MPoly p(nvars);
        p.add_term(e, Rational(1));
        return p;
    }

    std::size_t nvars() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return t_; }

    void add_term(const Exponents& e, const Rational& c)
    {
        if (e.size() != n_)
            throw dimension_error("exponent tuple length mismatch");
        for (int x : e)
            if (x < 0)
                throw invalid_input("negative exponent");
        if (c == 0)
            return;
        auto it = t_.find(e);
        if (it == t_.end())
            t_.emplace(e, c);
        else if ((it->second += c) == 0)
            t_.erase(it);
    }

    int total_degree() const
    {
        int d = -1;
        for (const auto& [e, c] : t_) {
            int s = 0;
            for (int x : e)
                s += x;
            d = std::max(d, s);
        }
        return d;
    }

    /// Homogeneous parts keyed by degree.
    std::map<int, MPoly> homogeneous_parts() const
    {
        std::map<int, MPoly> parts;
        for (const auto& [e, c] : t_) {
            int s = 0;
            for (int x : e)
                s += x;
            auto it = parts.try_emplace(s, MPoly(n_)).first;
            it->second.add_term(e, c);
        }
        return parts;
    }

    Rational operator()(const std::vector<Rational>& x) const
    {
        if (x.size() != n_)
            throw dimension_error("evaluation point length mismatch");
        Rational acc(0);
        for (const auto& [e, c] : t_) {
            Rational m = c;
            for (std::size_t j = 0; j < n_; ++j)
                for (int k = 0; k < e[j]; ++k)
                    m *= x[j];
            acc += m;
        }
        return acc;
    }

    MPoly derivative(std::size_t j) const
    {
        if (j >= n_)
            throw dimension_error("derivative variable out of range");
        MPoly d(n_);
        for (const auto& [e, c] : t_) {
            if (e[j] == 0)
                continue;
            Exponents f = e;
            --f[j];
            d.add_term(f, c * e[j]);
        }
        return d;
    }

    friend MPoly operator+(MPoly a, const MPoly& b)
    {
        a.check(b);
        for (const auto& [e, c] : b.t_)
            a.add_term(e, c);
        return a;
    }
    friend MPoly operator-(MPoly a, const MPoly& b)
    {
        a.check(b);
        for (const auto& [e, c] : b.t_)
            a.add_term(e, -c);
        return a;
    }
    friend MPoly operator*(const MPoly& a, const Rational& s)
    {
        MPoly p(a.n_);
        for (const auto& [e, c] : a.t_)
            p.add_term(e, c * s);
        return p;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b)
    {
        a.check(b);
        MPoly p(a.n_);
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                Exponents e(a.n_);
                for (std::size_t j = 0; j < a.n_; ++j)
                    e[j] = ea[j] + eb[j];
                p.add_term(e, ca * cb);
            }
        return p;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.n_ == b.n_ && a.t_ == b.t_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    /// Exact divisibility by lex division; a single divisor is its own Groebner basis.
    bool divides(const MPoly& f) const
    {
        check(f);
        if (f.is_zero())
            return true;
        if (is_zero())
            return false;
        const auto& [lg, cg] = *t_.rbegin();
        MPoly r = f;
        while (!r.is_zero()) {
            const auto [lr, cr] = *r.t_.rbegin();
            Exponents q(n_);
            for (std::size_t j = 0; j < n_; ++j) {
                q[j] = lr[j] - lg[j];
                if (q[j] < 0)
                    return false;
            }
            MPoly m(n_);
            m.add_term(q, cr / cg);
            r = r - m * *this;
        }
        return true;
    }

    std::string to_string(const std::vector<std::string>& names = {}) const
    {
        if (t_.empty())
            return "0";
        std::string s;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational ac = abs(c);
            if (!s.empty())
                s += c < 0 ? " - " : " + ";
            else if (c < 0)
                s += "-";
            std::string mono;
            for (std::size_t j = 0; j < n_; ++j) {
                if (e[j] == 0)
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += j < names.size() ? names[j] : "x" + std::to_string(j + 1);
                if (e[j] > 1)
                    mono += "^" + std::to_string(e[j]);
            }
            if (mono.empty())
                s += crtube::to_string(ac);
            else if (ac == 1)
                s += mono;
            else
                s += crtube::to_string(ac) + "*" + mono;
        }
        return s;
    }

private:
    void check(const MPoly& o) const
    {
        if (o.n_ != n_)
            throw dimension_error("variable count mismatch");
    }

    std::size_t n_ = 0;
    std::map<Exponents, Rational> t_;
};

} // namespace crtube
