/**
 * @file catalog.hpp
 * @brief Named fixtures with expected invariants, and a verifier that recomputes them.
 *
 * Every expectation carries a provenance tag: "reference" for values stated with the
 * worked example, "derived:<oracle>" for values produced by an independent oracle
 * before being frozen, "metadata" for stated values that are recorded but not computed.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cralgebra.hpp"
#include "endo.hpp"
#include "families.hpp"
#include "io.hpp"
#include "tube.hpp"

namespace crtube::catalog {

using io::json;

inline constexpr const char* schema = "crtube-catalog/1";
inline constexpr const char* verify_schema = "crtube-verify/1";
inline constexpr std::uint64_t default_seed = 20240501;

struct Expectation {
    std::string key;
    json value;
    std::string provenance;
};

struct CatalogEntry {
    std::string name;
    std::string family;
    json params = json::object();
    std::optional<TubeDatum> tube;
    std::optional<QMatrix> endo;
    std::optional<CRAlgebra> algebra;
    std::vector<Expectation> expected;

    std::string kind() const { return algebra ? "algebra" : endo ? "endo" : "tube"; }
};

/// Keys an expectation may use.
inline const std::vector<std::string>& vocabulary()
{
    static const std::vector<std::string> keys{
        "degree",        "chain_dims",      "minimal",       "conical",       "witness",  "cyclic",
        "arithmetic_progression", "modulus", "class",        "stability_order", "expected_aut_dim",
        "jacobi",        "dim_g",           "dim_derived",   "solvable",      "conditions", "k",
        "space_dims",    "nilradical_dim",  "nilcenter_dim", "sl2_triple",    "hol_dim",  "aut_order"};
    return keys;
}

inline bool is_metadata_key(const std::string& k) { return k == "hol_dim" || k == "aut_order"; }

inline const std::vector<std::string>& all_names()
{
    static const std::vector<std::string> names{
        "EI",      "EY(3)",   "EY(1/2)", "EY(1)",   "EY(2)",   "EY(5)",    "EZ",      "EX(3)",    "EX(5/2)",
        "EX(4)",   "EX(5)",   "EX(7)",   "EV",      "KU(3)",   "KU(4)",    "JP(2,1)", "JP(3,1)",  "JP(4,1)",
        "JP(3,2)", "IP(3)",   "IP(4)",   "QC(2,1)", "QC(3,1)", "QC(2,2)",  "QC(4,1)", "QC(3,2)",  "NIL(3)",
        "RAP(3)",  "GU(1)",   "GU(2)",   "GU(1/2)", "GX(1,1)", "FQ(2i,1)", "AII(1)"};
    return names;
}

/// Fixture file stem: EY(1/2) -> EY_1-2, FQ(2i,1) -> FQ_2i_1.
inline std::string file_stem(const std::string& name)
{
    std::string s;
    for (char c : name) {
        if (c == '(' || c == ',')
            s += '_';
        else if (c == '/')
            s += '-';
        else if (c != ')')
            s += c;
    }
    return s;
}

namespace detail {

struct ParsedName {
    std::string family;
    std::vector<std::string> args;
};

inline ParsedName parse_name(const std::string& name)
{
    ParsedName p;
    auto open = name.find('(');
    if (open == std::string::npos) {
        p.family = name;
        return p;
    }
    if (name.back() != ')')
        throw invalid_input("malformed catalog name '" + name + "'");
    p.family = name.substr(0, open);
    std::string inner = name.substr(open + 1, name.size() - open - 2);
    std::size_t start = 0;
    for (;;) {
        auto comma = inner.find(',', start);
        p.args.push_back(inner.substr(start, comma - start));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return p;
}

inline void want_args(const ParsedName& p, std::size_t n)
{
    if (p.args.size() != n)
        throw invalid_input(p.family + " takes " + std::to_string(n) + " parameter(s)");
}

inline int small_int(const std::string& s)
{
    Rational r = parse_rational(s);
    if (den(r) != 1 || r < 0 || r > 64)
        throw invalid_input("expected a small non-negative integer, got '" + s + "'");
    return static_cast<int>(num(r));
}

inline void expect(CatalogEntry& e, const std::string& key, json v, const std::string& prov)
{
    e.expected.push_back({key, std::move(v), prov});
}

inline json dims_list(std::initializer_list<int> ds) { return json(std::vector<int>(ds)); }

inline json all_conditions()
{
    ConditionReport r;
    r.i_dims = r.ii_brackets = r.iii_not_levi_flat = r.iv_levi_degenerate = r.v_two_nondegenerate = true;
    r.effective = r.minimal_generation = true;
    return io::conditions_json(r);
}

inline const std::map<std::string, std::string>& ey_moduli()
{
    static const std::map<std::string, std::string> m{
        {"3", "1/2"}, {"1/2", "-35937/5476"}, {"1", "-27/50"}, {"2", "27/2704"}, {"5", "35937/14450"}};
    return m;
}

inline const std::map<std::string, std::string>& ex_moduli()
{
    static const std::map<std::string, std::string> m{{"3", "9261/400"},
                                                      {"5/2", "185193/3136"},
                                                      {"4", "59319/4900"},
                                                      {"5", "343/36"},
                                                      {"7", "2146689/270400"}};
    return m;
}

inline void endo_common(CatalogEntry& e, const QMatrix& phi, const QVec& a)
{
    e.endo = phi;
    e.tube = families::endo_tube(phi, a);
    expect(e, "degree", 2, "reference");
    expect(e, "chain_dims", dims_list({2, 1, 0}), "reference");
    expect(e, "minimal", true, "derived:linear_closure");
    expect(e, "conical", true, "derived:tangent_contains_basepoint");
    expect(e, "cyclic", true, "derived:krylov_rank");
}

inline void tube_common(CatalogEntry& e, int degree, json dims, const std::string& prov = "reference")
{
    expect(e, "degree", degree, prov);
    expect(e, "chain_dims", std::move(dims), prov);
    expect(e, "minimal", true, "derived:linear_closure");
    expect(e, "conical", true, "derived:tangent_contains_basepoint");
}

inline void algebra_common(CatalogEntry& e, bool solvable, const std::string& solvable_prov)
{
    expect(e, "jacobi", true, "derived:structure_constants");
    expect(e, "dim_g", 5, "reference");
    expect(e, "conditions", all_conditions(), "reference");
    expect(e, "solvable", solvable, solvable_prov);
    expect(e, "k", 2, "derived:q_chain");
}

} // namespace detail

/// Builds a named entry; out-of-family parameters raise invalid_input.
inline CatalogEntry entry(const std::string& name)
{
    using namespace detail;
    namespace fam = families;
    ParsedName p = parse_name(name);
    CatalogEntry e;
    e.name = name;
    e.family = p.family;
    const std::string& f = p.family;

    if (f == "EI") {
        want_args(p, 0);
        endo_common(e, fam::ei(), {1, 0, 1});
        expect(e, "arithmetic_progression", true, "reference");
        expect(e, "modulus", "inf", "reference");
        expect(e, "class", "LIGHT_CONE", "reference");
        expect(e, "expected_aut_dim", 7, "reference");
        expect(e, "hol_dim", 10, "metadata");
    } else if (f == "EY") {
        want_args(p, 1);
        Rational w = parse_rational(p.args[0]);
        if (w <= 0)
            throw invalid_input("EY needs omega > 0");
        e.params = json{{"omega", to_string(w)}};
        endo_common(e, fam::ey(w), {1, 0, 1});
        auto it = ey_moduli().find(to_string(w));
        if (it == ey_moduli().end())
            throw invalid_input("EY(" + to_string(w) + ") has no frozen modulus");
        expect(e, "arithmetic_progression", false, "derived:sorted_roots");
        expect(e, "modulus", it->second, "derived:eigenvalue_expansion");
        expect(e, "class", "EY", "reference");
        expect(e, "stability_order", 1, "reference");
        expect(e, "expected_aut_dim", 5, "reference");
        expect(e, "hol_dim", 5, "metadata");
    } else if (f == "EZ") {
        want_args(p, 0);
        endo_common(e, fam::ez(), {1, 0, 1});
        expect(e, "arithmetic_progression", false, "derived:sorted_roots");
        expect(e, "modulus", "27/4", "reference");
        expect(e, "class", "EZ", "reference");
        expect(e, "stability_order", 1, "reference");
        expect(e, "expected_aut_dim", 5, "reference");
        expect(e, "hol_dim", 5, "metadata");
    } else if (f == "EX") {
        want_args(p, 1);
        Rational t = parse_rational(p.args[0]);
        if (t <= 2)
            throw invalid_input("EX needs theta > 2");
        e.params = json{{"theta", to_string(t)}};
        endo_common(e, fam::ex(t), {1, 1, 1});
        auto it = ex_moduli().find(to_string(t));
        if (it == ex_moduli().end())
            throw invalid_input("EX(" + to_string(t) + ") has no frozen modulus");
        expect(e, "arithmetic_progression", false, "derived:sorted_roots");
        expect(e, "modulus", it->second, "derived:eigenvalue_expansion");
        expect(e, "class", "EX", "reference");
        expect(e, "stability_order", 1, "reference");
        expect(e, "expected_aut_dim", 5, "reference");
        expect(e, "hol_dim", 5, "metadata");
    } else if (f == "NIL" || f == "RAP") {
        want_args(p, 1);
        int n = small_int(p.args[0]);
        if (n != 3)
            throw invalid_input(f + " is catalogued for n = 3 only");
        e.params = json{{"n", n}};
        bool nil = f == "NIL";
        endo_common(e, nil ? fam::nilpotent(3) : fam::real_progression(3), nil ? QVec{1, 0, 0} : QVec{1, 1, 1});
        expect(e, "arithmetic_progression", true, "derived:sorted_roots");
        expect(e, "modulus", "inf", "derived:eigenvalue_expansion");
        expect(e, "class", "LIGHT_CONE", "derived:eigenvalue_expansion");
        expect(e, "expected_aut_dim", nil ? 6 : 5, "reference");
    } else if (f == "EV") {
        want_args(p, 0);
        e.tube = fam::ev();
        tube_common(e, 2, dims_list({2, 1, 0}));
        expect(e, "witness", true, "derived:lie_derivative_division");
        expect(e, "dim_g", 5, "reference");
        expect(e, "dim_derived", 4, "reference");
        expect(e, "solvable", true, "reference");
        expect(e, "aut_order", 1, "metadata");
    } else if (f == "KU") {
        want_args(p, 1);
        int m = small_int(p.args[0]);
        if (m < 3 || m > 8)
            throw invalid_input("KU needs 3 <= m <= 8");
        e.params = json{{"m", m}};
        e.tube = fam::ku(m);
        tube_common(e, 2, dims_list({2, 1, 0}));
        expect(e, "dim_g", m + 2, "reference");
        expect(e, "dim_derived", m + 1, "reference");
        expect(e, "solvable", true, "reference");
    } else if (f == "JP") {
        want_args(p, 2);
        int k = small_int(p.args[0]), c = small_int(p.args[1]);
        if (k < 2 || k > 4 || c < 1 || c > 6)
            throw invalid_input("JP needs k in {2, 3, 4} and 1 <= c <= 6");
        e.params = json{{"k", k}, {"c", c}};
        e.tube = fam::jp(k, c);
        json dims = json::array();
        for (int r = k; r >= 0; --r)
            dims.push_back(r);
        tube_common(e, k, dims);
        if (!e.tube->witnesses.empty())
            expect(e, "witness", true, "derived:lie_derivative_division");
    } else if (f == "IP") {
        want_args(p, 1);
        int m = small_int(p.args[0]);
        if (m < 2 || m > 8)
            throw invalid_input("IP needs 2 <= m <= 8");
        e.params = json{{"m", m}};
        e.tube = fam::ip(m);
        tube_common(e, 2, dims_list({2, 1, 0}));
        expect(e, "witness", true, "derived:graded_ideal_membership");
    } else if (f == "QC") {
        want_args(p, 2);
        int pp = small_int(p.args[0]), q = small_int(p.args[1]);
        e.params = json{{"p", pp}, {"q", q}};
        e.tube = fam::qc(pp, q);
        tube_common(e, 2, dims_list({pp + q - 1, 1, 0}));
        expect(e, "witness", true, "derived:lie_derivative_division");
    } else if (f == "GU") {
        want_args(p, 1);
        Rational g = parse_rational(p.args[0]);
        e.params = json{{"gamma", to_string(g)}};
        e.algebra = fam::gu(g);
        algebra_common(e, true, "reference");
        expect(e, "dim_derived", 4, "reference");
        expect(e, "space_dims", json{{"g0", 0}, {"H", 4}, {"F", 2}}, "reference");
        expect(e, "nilradical_dim", 4, "derived:trace_form");
        expect(e, "nilcenter_dim", 1, "derived:trace_form");
    } else if (f == "GX") {
        want_args(p, 2);
        Rational b = parse_rational(p.args[0]), g = parse_rational(p.args[1]);
        e.params = json{{"beta4", to_string(b)}, {"gamma", to_string(g)}};
        e.algebra = fam::gx(b, g);
        algebra_common(e, true, "reference");
    } else if (f == "FQ") {
        want_args(p, 2);
        Gaussian mu = parse_gaussian(p.args[0]), nu = parse_gaussian(p.args[1]);
        e.params = json{{"mu", io::to_json(mu)}, {"nu", io::to_json(nu)}};
        e.algebra = fam::fq(mu, nu);
        algebra_common(e, false, "derived:derived_series");
    } else if (f == "AII") {
        want_args(p, 1);
        Rational b = parse_rational(p.args[0]);
        e.params = json{{"beta4", to_string(b)}};
        e.algebra = fam::aii(b);
        algebra_common(e, false, "reference");
        expect(e, "sl2_triple", true, "reference");
    } else {
        throw invalid_input("unknown catalog entry '" + name + "'");
    }
    return e;
}

// ---- serialization

inline json to_json(const CatalogEntry& e)
{
    json payload = json::object();
    if (e.endo)
        payload["endo"] = io::endo_json(*e.endo);
    if (e.tube)
        payload["tube"] = io::to_json(*e.tube);
    if (e.algebra)
        payload["algebra"] = io::to_json(*e.algebra);
    json ex = json::array();
    for (const auto& x : e.expected)
        ex.push_back(json{{"key", x.key}, {"value", x.value}, {"provenance", x.provenance}});
    return json{{"schema", schema}, {"name", e.name},   {"family", e.family}, {"params", e.params},
                {"kind", e.kind()}, {"payload", payload}, {"expected", ex}};
}

inline CatalogEntry from_json(const json& j)
{
    using io::child;
    using io::member;
    CatalogEntry e;
    if (io::read_string(member(j, "schema", ""), "/schema") != schema)
        io::fail("/schema", std::string("expected \"") + schema + "\"");
    e.name = io::read_string(member(j, "name", ""), "/name");
    e.family = io::read_string(member(j, "family", ""), "/family");
    e.params = member(j, "params", "");
    const json& pl = member(j, "payload", "");
    if (pl.contains("endo"))
        e.endo = io::read_endo(pl["endo"], "/payload/endo");
    if (pl.contains("tube"))
        e.tube = io::read_tube(pl["tube"], "/payload/tube");
    if (pl.contains("algebra"))
        e.algebra = io::read_cralgebra(pl["algebra"], "/payload/algebra");
    if (!e.tube && !e.algebra)
        io::fail("/payload", "needs a tube or an algebra");
    const json& ex = io::array_at(member(j, "expected", ""), "/expected");
    for (std::size_t k = 0; k < ex.size(); ++k) {
        std::string p = child("/expected", k);
        std::string key = io::read_string(member(ex[k], "key", p), child(p, "key"));
        if (std::find(vocabulary().begin(), vocabulary().end(), key) == vocabulary().end())
            io::fail(child(p, "key"), "unknown expectation key '" + key + "'");
        std::string prov = io::read_string(member(ex[k], "provenance", p), child(p, "provenance"));
        if (prov != "reference" && prov != "metadata" && prov.rfind("derived:", 0) != 0)
            io::fail(child(p, "provenance"), "provenance must be reference, metadata or derived:<oracle>");
        e.expected.push_back({key, member(ex[k], "value", p), prov});
    }
    return e;
}

// ---- verification

namespace detail {

inline bool witness_holds(const TubeDatum& td)
{
    if (td.witnesses.empty())
        throw precondition_error("entry has no witness polynomials");
    for (const auto& w : td.witnesses)
        if (w(td.a) != 0)
            return false;
    for (const auto& f : td.fields) {
        bool ok = td.witnesses.size() == 1 ? invariance_witness(td.witnesses[0], f) : ideal_invariance(td.witnesses, f);
        if (!ok)
            return false;
    }
    return true;
}

inline const CRAlgebra& algebra_of(const CatalogEntry& e, std::optional<CRAlgebra>& bridged)
{
    if (e.algebra)
        return *e.algebra;
    if (!bridged)
        bridged = tube_to_cralgebra(*e.tube);
    return *bridged;
}

inline bool sl2_triple_holds(const CatalogEntry& e)
{
    if (e.family != "AII")
        throw precondition_error("no certified sl(2) triple for this entry");
    Rational b = parse_rational(e.params.at("beta4").get<std::string>());
    auto [ep, h, em] = families::aii_sl2_triple(b);
    const auto& g = e.algebra->g;
    return g.bracket(h, ep) == scale(Gaussian(2), ep) && g.bracket(h, em) == scale(Gaussian(-2), em) &&
           g.bracket(ep, em) == h;
}

inline const QMatrix& need_endo(const CatalogEntry& e)
{
    if (!e.endo)
        throw precondition_error("entry has no endomorphism");
    return *e.endo;
}

inline const TubeDatum& need_tube(const CatalogEntry& e)
{
    if (!e.tube)
        throw precondition_error("entry has no tube datum");
    return *e.tube;
}

} // namespace detail

/// Recomputes one invariant of an entry.
inline json compute(const CatalogEntry& e, const std::string& key)
{
    using namespace detail;
    std::optional<CRAlgebra> bridged;
    if (key == "degree")
        return io::optional_int(degeneracy_degree(need_tube(e)));
    if (key == "chain_dims")
        return io::chain_dims(kernel_chain(need_tube(e)));
    if (key == "minimal")
        return is_minimal_sufficient(need_tube(e)).verdict == Minimality::holds;
    if (key == "conical")
        return conical_check(need_tube(e));
    if (key == "witness")
        return witness_holds(need_tube(e));
    if (key == "cyclic")
        return is_cyclic_pair(need_endo(e), need_tube(e).a);
    if (key == "arithmetic_progression")
        return is_arithmetic_progression(need_endo(e));
    if (key == "modulus")
        return to_string(modulus(need_endo(e)));
    if (key == "class")
        return to_string(classify3(need_endo(e)).cls);
    if (key == "stability_order")
        return stability_order(need_endo(e), 2);
    if (key == "expected_aut_dim")
        return expected_aut_dim(need_endo(e));
    if (key == "sl2_triple")
        return sl2_triple_holds(e);
    const CRAlgebra& cra = algebra_of(e, bridged);
    if (key == "jacobi")
        return jacobi_check(cra.g).holds;
    if (key == "dim_g")
        return cra.g.dim();
    if (key == "dim_derived")
        return bracket_span(cra.g, whole(cra.g), whole(cra.g)).dim();
    if (key == "solvable")
        return is_solvable(cra.g);
    if (key == "nilradical_dim")
        return nilradical_solvable(cra.g).dim();
    if (key == "nilcenter_dim")
        return nilcenter_solvable(cra.g).dim();
    auto r = condition_report(cra);
    if (key == "conditions")
        return io::conditions_json(r);
    if (key == "k")
        return io::optional_int(r.k);
    if (key == "space_dims")
        return json{{"g0", r.dim_g0}, {"H", r.dim_h}, {"F", r.dim_f_real}};
    throw invalid_input("cannot compute expectation key '" + key + "'");
}

struct CheckResult {
    std::string key, provenance, status;  // status: pass, fail, metadata, skipped
    json expected, actual;
};

struct EntryReport {
    std::string name, kind;
    std::vector<CheckResult> checks;
    bool passed() const
    {
        return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == "fail"; });
    }
};

namespace detail {

inline CheckResult run_check(const std::string& key, const std::string& prov, const json& expected,
                             const std::function<json()>& f)
{
    CheckResult c{key, prov, "", expected, nullptr};
    try {
        c.actual = f();
        c.status = c.actual == expected ? "pass" : "fail";
    } catch (const std::exception& ex) {
        c.actual = json{{"error", ex.what()}};
        c.status = "fail";
    }
    return c;
}

/// Small invertible integer matrix from the generator.
inline QMatrix random_invertible(std::size_t n, std::mt19937_64& rng)
{
    for (;;) {
        QMatrix g(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                g(i, j) = static_cast<long>(rng() % 7) - 3;
        if (rank(g) == n)
            return g;
    }
}

inline std::uint64_t name_hash(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s)
        h = (h ^ c) * 1099511628211ULL;
    return h;
}

/// K^r of the transported datum equals g K^r.
inline bool affine_invariance(const TubeDatum& td, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    QMatrix g = random_invertible(td.n, rng);
    QVec h(td.n);
    for (auto& x : h)
        x = static_cast<long>(rng() % 5) - 2;
    auto c0 = kernel_chain(td);
    auto c1 = kernel_chain(transport(td, g, h));
    if (c0.spaces.size() != c1.spaces.size())
        return false;
    for (std::size_t r = 0; r < c0.spaces.size(); ++r)
        if (push_forward(g, c0.spaces[r]) != c1.spaces[r])
            return false;
    return true;
}

} // namespace detail

/// Compares every expectation and adds the automatic cross-checks for tube entries.
inline EntryReport verify_entry(const CatalogEntry& e, std::uint64_t seed = default_seed)
{
    EntryReport rep{e.name, e.kind(), {}};
    for (const auto& x : e.expected) {
        if (is_metadata_key(x.key) || x.provenance == "metadata") {
            rep.checks.push_back({x.key, x.provenance, "metadata", x.value, nullptr});
            continue;
        }
        rep.checks.push_back(detail::run_check(x.key, x.provenance, x.value, [&] { return compute(e, x.key); }));
    }
    if (e.tube) {
        const TubeDatum& td = *e.tube;
        auto tube_deg = io::optional_int(degeneracy_degree(td));
        CheckResult ur{"ur_cross", "derived:tube_to_cralgebra", "", tube_deg, nullptr};
        try {
            ur.actual = io::optional_int(nondegeneracy_degree_alg(tube_to_cralgebra(td)));
            ur.status = ur.actual == ur.expected ? "pass" : "fail";
        } catch (const invalid_input& ex) {
            ur.actual = json{{"skipped", ex.what()}};
            ur.status = "skipped";
        }
        rep.checks.push_back(std::move(ur));
        std::uint64_t s = seed ^ detail::name_hash(e.name);
        rep.checks.push_back(
            detail::run_check("affine_invariance", "derived:transport", true, [&] { return detail::affine_invariance(td, s); }));
        if (e.endo) {
            rep.checks.push_back(detail::run_check("k1_is_span_a", "derived:kernel_chain", true, [&] {
                auto c = kernel_chain(td);
                return c.spaces.size() > 1 && c.spaces[1] == QSubspace::span(td.n, {td.a});
            }));
        }
    }
    return rep;
}

/// Pairwise local equivalence for endomorphism-backed 3x3 entries.
inline std::vector<std::vector<bool>> inequivalence_matrix(const std::vector<std::string>& names)
{
    std::vector<QMatrix> phis;
    for (const auto& n : names) {
        auto e = entry(n);
        if (!e.endo || e.endo->rows() != 3)
            throw invalid_input("entry '" + n + "' is not backed by a 3x3 endomorphism");
        phis.push_back(*e.endo);
    }
    std::vector<std::vector<bool>> m(phis.size(), std::vector<bool>(phis.size()));
    for (std::size_t i = 0; i < phis.size(); ++i)
        for (std::size_t j = 0; j < phis.size(); ++j)
            m[i][j] = locally_equivalent(phis[i], phis[j]);
    return m;
}

struct GlobalCheck {
    std::vector<std::string> names;
    std::vector<std::vector<bool>> expected, actual;
    std::string provenance;
    bool passed() const { return expected == actual; }
};

inline std::vector<GlobalCheck> global_checks()
{
    auto diag = [](std::size_t n) {
        std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            m[i][i] = true;
        return m;
    };
    std::vector<GlobalCheck> out{
        {{"EI", "EY(3)", "EZ", "EX(3)", "EX(5)"}, diag(5), {}, "reference"},
        {{"EI", "NIL(3)", "RAP(3)"}, std::vector<std::vector<bool>>(3, std::vector<bool>(3, true)), {}, "reference"},
        {{"EX(3)", "EX(4)"}, diag(2), {}, "derived:modulus"}};
    for (auto& g : out)
        g.actual = inequivalence_matrix(g.names);
    return out;
}

struct VerifyReport {
    std::string target;
    std::uint64_t seed = default_seed;
    std::vector<EntryReport> entries;
    std::vector<GlobalCheck> globals;

    bool passed() const
    {
        return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.passed(); }) &&
               std::all_of(globals.begin(), globals.end(), [](const auto& g) { return g.passed(); });
    }
};

/// verify("ALL") also runs the global inequivalence tables.
inline VerifyReport verify(const std::string& target, std::uint64_t seed = default_seed)
{
    VerifyReport r{target, seed, {}, {}};
    if (target == "ALL") {
        for (const auto& n : all_names())
            r.entries.push_back(verify_entry(entry(n), seed));
        r.globals = global_checks();
    } else {
        r.entries.push_back(verify_entry(entry(target), seed));
    }
    return r;
}

inline json to_json(const VerifyReport& r)
{
    std::size_t checks = 0, failed = 0, metadata = 0, skipped = 0;
    json entries = json::array();
    for (const auto& e : r.entries) {
        json cs = json::array();
        for (const auto& c : e.checks) {
            ++checks;
            failed += c.status == "fail";
            metadata += c.status == "metadata";
            skipped += c.status == "skipped";
            cs.push_back(json{{"key", c.key},
                              {"provenance", c.provenance},
                              {"expected", c.expected},
                              {"actual", c.actual},
                              {"status", c.status}});
        }
        entries.push_back(
            json{{"name", e.name}, {"kind", e.kind}, {"checks", cs}, {"status", e.passed() ? "pass" : "fail"}});
    }
    json globals = json::array();
    for (const auto& g : r.globals) {
        ++checks;
        failed += !g.passed();
        globals.push_back(json{{"key", "inequivalence_matrix"},
                               {"names", g.names},
                               {"provenance", g.provenance},
                               {"expected", g.expected},
                               {"actual", g.actual},
                               {"status", g.passed() ? "pass" : "fail"}});
    }
    return json{{"schema", verify_schema},
                {"target", r.target},
                {"seed", r.seed},
                {"entries", entries},
                {"global", globals},
                {"summary",
                 {{"entries", r.entries.size()},
                  {"checks", checks},
                  {"failed", failed},
                  {"metadata", metadata},
                  {"skipped", skipped}}},
                {"status", r.passed() ? "pass" : "fail"}};
}

} // namespace crtube::catalog
