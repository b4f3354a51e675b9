/**
 * @file scalar.hpp
 * @brief Exact scalars: arbitrary-precision rationals and Gaussian rationals.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <ostream>
#include <string>
#include <string_view>

#include "../errors.hpp"

namespace crtube {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_zero(const Rational& r) { return r == 0; }
inline Rational conj(const Rational& r) { return r; }
inline int sign(const Rational& r) { return r.sign(); }

namespace detail {

inline BigInt parse_int(std::string_view s, const std::string& whole)
{
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size())
        throw invalid_input("malformed rational '" + whole + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw invalid_input("malformed rational '" + whole + "'");
    BigInt v(std::string(s.substr(i)));
    return neg ? BigInt(-v) : v;
}

} // namespace detail

/// Parses "p", "p/q" (q != 0). Whitespace is not accepted.
inline Rational parse_rational(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(detail::parse_int(s, s));
    BigInt p = detail::parse_int(std::string_view(s).substr(0, slash), s);
    BigInt q = detail::parse_int(std::string_view(s).substr(slash + 1), s);
    if (q == 0)
        throw invalid_input("zero denominator in '" + s + "'");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return Rational(p, q);
}

/// Wire format: "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r)
{
    if (den(r) == 1)
        return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// re + i*im with rational parts.
struct Gaussian {
    Rational re, im;

    Gaussian() = default;
    Gaussian(const Rational& r) : re(r) {}
    Gaussian(int r) : re(r) {}
    Gaussian(const Rational& r, const Rational& i) : re(r), im(i) {}

    static Gaussian i() { return {0, 1}; }

    Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
    Gaussian& operator*=(const Gaussian& o)
    {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o)
    {
        Rational n = o.re * o.re + o.im * o.im;
        if (n == 0)
            throw std::domain_error("division by zero");
        Rational r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = std::move(r);
        return *this;
    }
    Gaussian operator-() const { return {-re, -im}; }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

inline bool is_zero(const Gaussian& z) { return z.re == 0 && z.im == 0; }
inline Gaussian conj(const Gaussian& z) { return {z.re, -z.im}; }
inline bool is_real(const Gaussian& z) { return z.im == 0; }

inline std::string to_string(const Gaussian& z)
{
    if (z.im == 0)
        return to_string(z.re);
    std::string s = z.re == 0 ? std::string() : to_string(z.re);
    if (z.im > 0 && !s.empty())
        s += "+";
    if (z.im == -1)
        s += "-";
    else if (z.im != 1)
        s += to_string(z.im) + "*";
    return s + "i";
}

/// Accepts "a", "bi", "a+bi", "a-bi", with a, b in the rational wire format.
inline Gaussian parse_gaussian(const std::string& s)
{
    if (s.empty())
        throw invalid_input("empty Gaussian rational");
    if (s.back() != 'i')
        return parse_rational(s);
    std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
            split = k;
            break;
        }
    std::string re = split == std::string::npos ? "0" : body.substr(0, split);
    std::string im = split == std::string::npos ? body : body.substr(split);
    if (!im.empty() && im.back() == '*')
        im.pop_back();
    if (im.empty() || im == "+")
        im = "1";
    else if (im == "-")
        im = "-1";
    return {parse_rational(re), parse_rational(im)};
}

inline std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << to_string(z); }

} // namespace crtube
