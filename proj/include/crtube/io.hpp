/**
 * @file io.hpp
 * @brief JSON wire format for tube data, endomorphisms, CR-algebras and reports.
 *
 * Rationals travel as strings "p/q", Gaussian rationals as {"re", "im"}.
 * Readers report schema violations with the JSON pointer of the offending node.
 */
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cralgebra.hpp"
#include "endo.hpp"
#include "errors.hpp"
#include "tube.hpp"

namespace crtube {

/// Schema violation at a JSON pointer.
struct schema_error : invalid_input {
    schema_error(std::string ptr, const std::string& msg)
        : invalid_input((ptr.empty() ? std::string("/") : ptr) + ": " + msg), pointer(std::move(ptr))
    {
    }
    std::string pointer;
};

namespace io {

using json = nlohmann::ordered_json;

inline std::string child(const std::string& ptr, const std::string& key)
{
    std::string k;
    for (char c : key) {
        if (c == '~')
            k += "~0";
        else if (c == '/')
            k += "~1";
        else
            k += c;
    }
    return ptr + "/" + k;
}

inline std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

[[noreturn]] inline void fail(const std::string& ptr, const std::string& msg) { throw schema_error(ptr, msg); }

inline const json& member(const json& j, const std::string& key, const std::string& ptr)
{
    if (!j.is_object())
        fail(ptr, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        fail(child(ptr, key), "missing required member");
    return *it;
}

inline const json& array_at(const json& j, const std::string& ptr)
{
    if (!j.is_array())
        fail(ptr, "expected an array");
    return j;
}

inline std::size_t read_size(const json& j, const std::string& ptr)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        fail(ptr, "expected a non-negative integer");
    return j.get<std::size_t>();
}

inline int read_int(const json& j, const std::string& ptr)
{
    if (!j.is_number_integer())
        fail(ptr, "expected an integer");
    return j.get<int>();
}

inline std::string read_string(const json& j, const std::string& ptr)
{
    if (!j.is_string())
        fail(ptr, "expected a string");
    return j.get<std::string>();
}

/// Accepts "p/q" strings and JSON integers.
inline Rational read_rational(const json& j, const std::string& ptr)
{
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    if (!j.is_string())
        fail(ptr, "expected a rational string \"p/q\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
        fail(ptr, e.what());
    }
}

inline Gaussian read_gaussian(const json& j, const std::string& ptr)
{
    if (j.is_object())
        return {read_rational(member(j, "re", ptr), child(ptr, "re")),
                read_rational(member(j, "im", ptr), child(ptr, "im"))};
    return Gaussian(read_rational(j, ptr));
}

inline QVec read_qvec(const json& j, const std::string& ptr, std::size_t n)
{
    array_at(j, ptr);
    if (j.size() != n)
        fail(ptr, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
    QVec v;
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(read_rational(j[i], child(ptr, i)));
    return v;
}

inline CVec read_cvec(const json& j, const std::string& ptr, std::size_t n)
{
    array_at(j, ptr);
    if (j.size() != n)
        fail(ptr, "expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
    CVec v;
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(read_gaussian(j[i], child(ptr, i)));
    return v;
}

inline QMatrix read_qmatrix(const json& j, const std::string& ptr, std::size_t rows, std::size_t cols)
{
    array_at(j, ptr);
    if (j.size() != rows)
        fail(ptr, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    std::vector<QVec> rs;
    for (std::size_t i = 0; i < rows; ++i)
        rs.push_back(read_qvec(j[i], child(ptr, i), cols));
    return QMatrix::from_rows(rs, cols);
}

/// Square matrix of unknown size.
inline QMatrix read_square(const json& j, const std::string& ptr)
{
    array_at(j, ptr);
    if (j.empty())
        fail(ptr, "matrix must be non-empty");
    return read_qmatrix(j, ptr, j.size(), j.size());
}

inline MPoly read_mpoly(const json& j, const std::string& ptr, std::size_t n)
{
    MPoly p(n);
    if (j.contains("vars")) {
        const auto& vs = array_at(j["vars"], child(ptr, "vars"));
        if (vs.size() != n)
            fail(child(ptr, "vars"), "expected " + std::to_string(n) + " variable names");
    }
    const auto& terms = array_at(member(j, "terms", ptr), child(ptr, "terms"));
    for (std::size_t t = 0; t < terms.size(); ++t) {
        std::string tp = child(child(ptr, "terms"), t);
        const auto& ex = array_at(member(terms[t], "exps", tp), child(tp, "exps"));
        if (ex.size() != n)
            fail(child(tp, "exps"), "expected " + std::to_string(n) + " exponents");
        Exponents e;
        for (std::size_t k = 0; k < n; ++k) {
            int v = read_int(ex[k], child(child(tp, "exps"), k));
            if (v < 0)
                fail(child(child(tp, "exps"), k), "exponent must be non-negative");
            e.push_back(v);
        }
        p.add_term(e, read_rational(member(terms[t], "coef", tp), child(tp, "coef")));
    }
    return p;
}

inline TubeDatum read_tube(const json& j, const std::string& ptr = "")
{
    TubeDatum td;
    td.n = read_size(member(j, "n", ptr), child(ptr, "n"));
    if (td.n == 0)
        fail(child(ptr, "n"), "dimension must be positive");
    td.a = read_qvec(member(j, "basepoint", ptr), child(ptr, "basepoint"), td.n);
    std::string fp = child(ptr, "fields");
    const auto& fs = array_at(member(j, "fields", ptr), fp);
    for (std::size_t k = 0; k < fs.size(); ++k) {
        std::string p = child(fp, k);
        AffineField f{read_qmatrix(member(fs[k], "linear", p), child(p, "linear"), td.n, td.n), QVec(td.n)};
        if (fs[k].contains("translation"))
            f.translation = read_qvec(fs[k]["translation"], child(p, "translation"), td.n);
        td.fields.push_back(std::move(f));
    }
    if (j.contains("witnesses")) {
        std::string wp = child(ptr, "witnesses");
        const auto& ws = array_at(j["witnesses"], wp);
        for (std::size_t k = 0; k < ws.size(); ++k)
            td.witnesses.push_back(read_mpoly(ws[k], child(wp, k), td.n));
    }
    return td;
}

inline QMatrix read_endo(const json& j, const std::string& ptr = "")
{
    return read_square(member(j, "matrix", ptr), child(ptr, "matrix"));
}

inline CRAlgebra read_cralgebra(const json& j, const std::string& ptr = "")
{
    std::size_t n = read_size(member(j, "dim", ptr), child(ptr, "dim"));
    if (n == 0)
        fail(child(ptr, "dim"), "dimension must be positive");
    CRAlgebra cra{RealLieAlgebra(n), {}};
    if (j.contains("labels")) {
        std::string lp = child(ptr, "labels");
        const auto& ls = array_at(j["labels"], lp);
        if (ls.size() != n)
            fail(lp, "expected " + std::to_string(n) + " labels");
        for (std::size_t k = 0; k < n; ++k)
            cra.g.labels.push_back(read_string(ls[k], child(lp, k)));
    }
    std::string bp = child(ptr, "brackets");
    const auto& bs = array_at(member(j, "brackets", ptr), bp);
    for (std::size_t k = 0; k < bs.size(); ++k) {
        std::string p = child(bp, k);
        std::size_t i = read_size(member(bs[k], "i", p), child(p, "i"));
        std::size_t jj = read_size(member(bs[k], "j", p), child(p, "j"));
        if (i >= n)
            fail(child(p, "i"), "index out of range");
        if (jj >= n)
            fail(child(p, "j"), "index out of range");
        QVec c = read_qvec(member(bs[k], "coeffs", p), child(p, "coeffs"), n);
        try {
            cra.g.set_bracket(i, jj, c);
        } catch (const std::exception& e) {
            fail(p, e.what());
        }
    }
    std::string qp = child(ptr, "q");
    const auto& qs = array_at(member(j, "q", ptr), qp);
    for (std::size_t k = 0; k < qs.size(); ++k)
        cra.q_basis.push_back(read_cvec(qs[k], child(qp, k), n));
    return cra;
}

// ---- writers

inline json to_json(const Rational& r) { return to_string(r); }
inline json to_json(const Gaussian& z) { return json{{"re", to_string(z.re)}, {"im", to_string(z.im)}}; }

template <class T>
json to_json(const Vec<T>& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(to_json(x));
    return a;
}

template <class T>
json to_json(const Matrix<T>& m)
{
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(to_json(m.row(i)));
    return a;
}

template <class T>
json basis_json(const Subspace<T>& s)
{
    json a = json::array();
    for (const auto& v : s.basis())
        a.push_back(to_json(v));
    return a;
}

inline json to_json(const MPoly& p)
{
    json vars = json::array();
    for (std::size_t k = 0; k < p.nvars(); ++k)
        vars.push_back("x" + std::to_string(k + 1));
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(json{{"exps", e}, {"coef", to_string(c)}});
    return json{{"vars", vars}, {"terms", terms}};
}

inline json to_json(const TubeDatum& td)
{
    json fs = json::array();
    for (const auto& f : td.fields)
        fs.push_back(json{{"linear", to_json(f.linear)}, {"translation", to_json(f.translation)}});
    json j{{"n", td.n}, {"basepoint", to_json(td.a)}, {"fields", fs}};
    if (!td.witnesses.empty()) {
        json ws = json::array();
        for (const auto& w : td.witnesses)
            ws.push_back(to_json(w));
        j["witnesses"] = ws;
    }
    return j;
}

inline json endo_json(const QMatrix& phi) { return json{{"matrix", to_json(phi)}}; }

inline json to_json(const CRAlgebra& cra)
{
    const auto& g = cra.g;
    json j{{"dim", g.dim()}};
    if (!g.labels.empty())
        j["labels"] = g.labels;
    json bs = json::array();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t k = i + 1; k < g.dim(); ++k)
            if (!is_zero_vec(g.structure(i, k)))
                bs.push_back(json{{"i", i}, {"j", k}, {"coeffs", to_json(g.structure(i, k))}});
    j["brackets"] = bs;
    json qs = json::array();
    for (const auto& v : cra.q_basis)
        qs.push_back(to_json(v));
    j["q"] = qs;
    return j;
}

inline json optional_int(const std::optional<int>& k) { return k ? json(*k) : json(nullptr); }

inline json chain_dims(const KernelChain& c)
{
    json a = json::array();
    for (const auto& s : c.spaces)
        a.push_back(s.dim());
    return a;
}

inline json to_json(const KernelChain& c)
{
    json spaces = json::array();
    for (std::size_t r = 0; r < c.spaces.size(); ++r)
        spaces.push_back(json{{"r", r}, {"dim", c.spaces[r].dim()}, {"basis", basis_json(c.spaces[r])}});
    bool deg = c.verdict == KernelChain::Verdict::degree;
    return json{{"dims", chain_dims(c)},
                {"spaces", spaces},
                {"verdict", deg ? "degree" : "stabilized_nonzero"},
                {"degree", deg ? json(c.degree) : json(nullptr)}};
}

inline json to_json(const Classification3& c)
{
    return json{{"class", to_string(c.cls)}, {"modulus", to_string(c.mu)}, {"mu0", to_string(mu0)}};
}

inline json conditions_json(const ConditionReport& r)
{
    return json{{"I_dims", r.i_dims},
                {"II_brackets", r.ii_brackets},
                {"III_not_levi_flat", r.iii_not_levi_flat},
                {"IV_levi_degenerate", r.iv_levi_degenerate},
                {"V_two_nondegenerate", r.v_two_nondegenerate},
                {"effective", r.effective},
                {"minimal_generation", r.minimal_generation}};
}

inline json to_json(const ConditionReport& r)
{
    json j = conditions_json(r);
    j["solvable"] = r.solvable;
    j["k"] = optional_int(r.k);
    j["dims"] = json{{"g", r.dim_g},   {"g0", r.dim_g0}, {"l0", r.dim_l0},       {"f", r.dim_f},
                     {"q", r.dim_q},   {"H", r.dim_h},   {"F", r.dim_f_real}};
    return j;
}

// ---- files

inline json parse_text(const std::string& text, const std::string& origin)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw schema_error("", origin + ": malformed JSON (" + std::string(e.what()) + ")");
    }
}

inline json load_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw invalid_input("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), path);
}

/// Two-space indentation plus trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline void save_file(const std::string& path, const json& j)
{
    std::ofstream out(path);
    if (!out)
        throw invalid_input("cannot write " + path);
    out << dump(j);
}

} // namespace io
} // namespace crtube
