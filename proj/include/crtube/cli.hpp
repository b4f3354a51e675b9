/**
 * @file cli.hpp
 * @brief Command dispatch for the crtube tool.
 *
 * Exit codes: 0 success, 1 verification failure, 2 invalid input.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "catalog.hpp"
#include "cralgebra.hpp"
#include "endo.hpp"
#include "io.hpp"
#include "tube.hpp"

namespace crtube::cli {

using io::json;

enum ExitCode : int { ok = 0, verification_failure = 1, invalid = 2 };

struct Options {
    bool json = false;
    std::uint64_t seed = catalog::default_seed;
    double tol = 1e-12;
};

namespace detail {

inline std::string fmt_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline QVec parse_vec(const std::string& s, const std::string& flag)
{
    QVec v;
    std::size_t start = 0;
    for (;;) {
        auto comma = s.find(',', start);
        std::string item = s.substr(start, comma - start);
        try {
            v.push_back(parse_rational(item));
        } catch (const std::exception&) {
            throw invalid_input(flag + ": cannot parse '" + item + "' as a rational");
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return v;
}

inline std::string render_value(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

/// Aligned "key  value" lines for the top level of an object.
inline void print_table(std::ostream& out, const json& j)
{
    std::size_t w = 0;
    for (const auto& [k, v] : j.items())
        w = std::max(w, k.size());
    for (const auto& [k, v] : j.items())
        out << k << std::string(w - k.size() + 2, ' ') << render_value(v) << "\n";
}

inline void emit(std::ostream& out, const Options& o, const json& j)
{
    if (o.json)
        out << io::dump(j);
    else
        print_table(out, j);
}

// ---- tube

inline int tube_analyze(const std::string& file, const Options& o, std::ostream& out)
{
    TubeDatum td = io::read_tube(io::load_file(file));
    QSubspace t = tangent_space(td);
    auto chain = kernel_chain(td);
    auto minimal = is_minimal_sufficient(td);
    auto vals = field_values(td);
    json levi = json::array();
    std::vector<std::size_t> complement;
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i; j < vals.size(); ++j) {
            auto l = levi_form(td, vals[i], vals[j]);
            complement = l.complement;
            levi.push_back(json{{"i", i}, {"j", j}, {"quotient", io::to_json(l.quotient)}});
        }
    bool deg = chain.verdict == KernelChain::Verdict::degree;
    json r{{"n", td.n},
           {"basepoint", io::to_json(td.a)},
           {"tangent_dim", t.dim()},
           {"tangent_basis", io::basis_json(t)},
           {"chain_dims", io::chain_dims(chain)},
           {"kernel_chain", io::to_json(chain)},
           {"degree", deg ? json(chain.degree) : json(nullptr)},
           {"verdict", deg ? "degree" : "stabilized_nonzero"},
           {"minimal", minimal.verdict == Minimality::holds ? "holds" : "inconclusive"},
           {"closure_dim", minimal.closure.dim()},
           {"conical", conical_check(td)},
           {"levi_complement", complement},
           {"levi_values", levi}};
    if (!o.json) {
        json brief = r;
        brief.erase("kernel_chain");
        brief.erase("tangent_basis");
        brief.erase("levi_values");
        brief["levi_nonzero_pairs"] = std::count_if(levi.begin(), levi.end(), [](const json& v) {
            return std::any_of(v["quotient"].begin(), v["quotient"].end(), [](const json& x) { return x != "0"; });
        });
        print_table(out, brief);
    } else {
        out << io::dump(r);
    }
    return ok;
}

inline int tube_witness(const std::string& file, const Options& o, std::ostream& out)
{
    TubeDatum td = io::read_tube(io::load_file(file));
    tangent_space(td);
    if (td.witnesses.empty())
        throw invalid_input(file + ": /witnesses: datum carries no witness polynomials");
    bool holds = true;
    json ws = json::array();
    for (std::size_t k = 0; k < td.witnesses.size(); ++k) {
        const MPoly& p = td.witnesses[k];
        json inv = json::array();
        for (const auto& f : td.fields)
            inv.push_back(invariance_witness(p, f));
        bool vanishes = p(td.a) == 0;
        holds = holds && vanishes;
        ws.push_back(json{{"index", k}, {"vanishes_at_basepoint", vanishes}, {"invariant", inv}});
    }
    json r{{"witnesses", ws}};
    if (td.witnesses.size() == 1) {
        for (const auto& f : td.fields)
            holds = holds && invariance_witness(td.witnesses[0], f);
    } else {
        json ideal = json::array();
        for (const auto& f : td.fields) {
            bool b = ideal_invariance(td.witnesses, f);
            ideal.push_back(b);
            holds = holds && b;
        }
        r["ideal_invariant"] = ideal;
    }
    r["holds"] = holds;
    emit(out, o, r);
    return holds ? ok : verification_failure;
}

// ---- endo

inline json endo_report(const QMatrix& phi, int d, const std::optional<QVec>& a, const Options& o)
{
    std::size_t n = phi.rows();
    json r{{"n", n}, {"charpoly", charpoly(phi).to_string()}, {"trace_free", phi.trace() == 0}};
    bool cyclic = is_cyclic(phi);
    r["cyclic"] = cyclic;
    if (a) {
        if (a->size() != n)
            throw invalid_input("--a has " + std::to_string(a->size()) + " entries, expected " + std::to_string(n));
        r["cyclic_pair"] = is_cyclic_pair(phi, *a);
    } else {
        auto v = find_cyclic_vector(phi, o.seed);
        r["cyclic_vector"] = v ? io::to_json(*v) : json(nullptr);
    }
    auto s = sigma_invariants(trace_free(phi));
    json sig = json::object();
    for (std::size_t j = 2; j <= n; ++j)
        sig[std::to_string(j)] = to_string(s.at(j));
    r["sigma"] = sig;
    r["arithmetic_progression"] = is_arithmetic_progression(phi);
    r["d"] = d;
    if (!cyclic)
        return r;
    r["general_position"] = d > 1 && static_cast<std::size_t>(d) < n ? json(general_position(phi, d)) : json(nullptr);
    if (n == 3) {
        auto c = classify3(phi);
        r["class"] = to_string(c.cls);
        r["modulus"] = to_string(c.mu);
        r["mu0"] = to_string(mu0);
        if (c.cls == Class3::ey || c.cls == Class3::ex) {
            try {
                auto inv = invert_modulus(c.cls, c.mu.value, o.tol);
                r["reference_parameter"] = fmt_double(to_double(inv.parameter));
                r["multiple_sign_changes"] = inv.multiple_sign_changes;
            } catch (const out_of_range_error&) {
                r["reference_parameter"] = nullptr;
            }
        }
    }
    try {
        r["stability_order"] = stability_order(phi, d);
    } catch (const precondition_error&) {
        r["stability_order"] = nullptr;
    }
    r["expected_aut_dim"] = expected_aut_dim(phi);
    return r;
}

inline int endo_analyze(const std::string& file, int d, const std::string& avec, const Options& o, std::ostream& out)
{
    QMatrix phi = io::read_endo(io::load_file(file));
    std::optional<QVec> a;
    if (!avec.empty())
        a = parse_vec(avec, "--a");
    emit(out, o, endo_report(phi, d, a, o));
    return ok;
}

inline int endo_compare(const std::string& f1, const std::string& f2, bool global, const Options& o, std::ostream& out)
{
    QMatrix a = io::read_endo(io::load_file(f1)), b = io::read_endo(io::load_file(f2));
    if (a.rows() != b.rows())
        throw invalid_input("endomorphisms act on spaces of different dimension");
    json r{{"locally_equivalent", locally_equivalent(a, b)}};
    if (global)
        r["globally_equivalent"] = globally_equivalent(a, b);
    emit(out, o, r);
    return ok;
}

inline int endo_make_tube(const std::string& file, int d, const std::string& avec, const std::string& outfile,
                          const Options& o, std::ostream& out)
{
    QMatrix phi = io::read_endo(io::load_file(file));
    QVec a = parse_vec(avec, "--a");
    if (a.size() != phi.rows())
        throw invalid_input("--a has " + std::to_string(a.size()) + " entries, expected " + std::to_string(phi.rows()));
    TubeDatum td = make_tube(phi, d, a);
    io::save_file(outfile, io::to_json(td));
    auto chain = kernel_chain(td);
    emit(out, o,
         json{{"output", outfile},
              {"n", td.n},
              {"fields", td.fields.size()},
              {"chain_dims", io::chain_dims(chain)},
              {"degree", io::optional_int(degeneracy_degree(td))}});
    return ok;
}

// ---- cralgebra

inline int cralgebra_check(const std::string& file, const Options& o, std::ostream& out)
{
    CRAlgebra cra = io::read_cralgebra(io::load_file(file));
    auto jr = jacobi_check(cra.g);
    json r{{"dim", cra.g.dim()}, {"jacobi", jr.holds}};
    if (!jr.holds) {
        auto [i, j, k] = *jr.triple;
        r["jacobi_triple"] = json::array({i, j, k});
        emit(out, o, r);
        return verification_failure;
    }
    CSubspace q = cra.q();
    r["q_independent"] = q.dim() == cra.q_basis.size();
    r["q_subalgebra"] = is_subalgebra(cra.g, q);
    if (!r["q_independent"].get<bool>() || !r["q_subalgebra"].get<bool>()) {
        emit(out, o, r);
        return verification_failure;
    }
    auto c = q_chain(cra);
    json stages = json::array();
    for (const auto& s : c.stages)
        stages.push_back(s.dim());
    r["q_chain_dims"] = stages;
    r["q_inf_dim"] = c.q_inf.dim();
    json cr = io::to_json(condition_report(cra));
    for (const auto& [k, v] : cr.items())
        r[k] = v;
    emit(out, o, r);
    return ok;
}

inline int cralgebra_from_tube(const std::string& file, const std::string& outfile, const Options& o,
                               std::ostream& out)
{
    TubeDatum td = io::read_tube(io::load_file(file));
    CRAlgebra cra = tube_to_cralgebra(td);
    io::save_file(outfile, io::to_json(cra));
    emit(out, o,
         json{{"output", outfile},
              {"dim", cra.g.dim()},
              {"k", io::optional_int(nondegeneracy_degree_alg(cra))},
              {"tube_degree", io::optional_int(degeneracy_degree(td))}});
    return ok;
}

// ---- catalog

inline int catalog_list(const Options& o, std::ostream& out)
{
    json a = json::array();
    for (const auto& n : catalog::all_names()) {
        auto e = catalog::entry(n);
        a.push_back(json{{"name", n}, {"family", e.family}, {"kind", e.kind()}, {"file", catalog::file_stem(n) + ".json"}});
    }
    if (o.json) {
        out << io::dump(a);
        return ok;
    }
    for (const auto& e : a) {
        std::string name = e["name"];
        std::string kind = e["kind"];
        out << name << std::string(12 - std::min<std::size_t>(name.size(), 11), ' ') << kind << "\n";
    }
    return ok;
}

inline int catalog_dump(const std::string& name, std::ostream& out)
{
    out << io::dump(catalog::to_json(catalog::entry(name)));
    return ok;
}

inline int catalog_verify(const std::string& name, const Options& o, std::ostream& out)
{
    auto rep = catalog::verify(name, o.seed);
    json j = catalog::to_json(rep);
    if (o.json) {
        out << io::dump(j);
    } else {
        for (const auto& e : j["entries"]) {
            int n = 0, meta = 0, skip = 0;
            for (const auto& c : e["checks"]) {
                ++n;
                meta += c["status"] == "metadata";
                skip += c["status"] == "skipped";
            }
            std::string name_s = e["name"];
            out << name_s << std::string(12 - std::min<std::size_t>(name_s.size(), 11), ' ')
                << e["status"].get<std::string>() << "  " << n << " checks";
            if (meta)
                out << ", " << meta << " metadata";
            if (skip)
                out << ", " << skip << " skipped";
            out << "\n";
            for (const auto& c : e["checks"])
                if (c["status"] == "fail")
                    out << "  FAIL " << c["key"].get<std::string>() << ": expected " << c["expected"].dump()
                        << ", got " << c["actual"].dump() << "\n";
        }
        for (const auto& g : j["global"])
            out << "inequivalence " << g["names"].dump() << "  " << g["status"].get<std::string>() << "\n";
        const auto& s = j["summary"];
        out << "summary: " << s["checks"] << " checks, " << s["failed"] << " failed, " << s["metadata"]
            << " metadata, " << s["skipped"] << " skipped\n";
    }
    return rep.passed() ? ok : verification_failure;
}

} // namespace detail

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    using namespace detail;
    CLI::App app{"Exact CR invariants of tube manifolds and CR-algebras", "crtube"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json, "Emit JSON");
    app.add_option("--seed", o.seed, "Seed for randomized searches");
    app.add_option("--tol", o.tol, "Tolerance for numeric inversions")->check(CLI::PositiveNumber);

    std::string file, file2, avec, outfile, name = "ALL";
    int d = 2;
    bool global = false;

    auto* tube = app.add_subcommand("tube", "Tube data")->require_subcommand(1);
    tube->fallthrough();
    auto* t_an = tube->add_subcommand("analyze", "Tangent space, kernel chain, degree, minimality, Levi form");
    t_an->add_option("file", file)->required();
    auto* t_wi = tube->add_subcommand("witness", "Polynomial invariance of the witnesses");
    t_wi->add_option("file", file)->required();

    auto* endo = app.add_subcommand("endo", "Cyclic endomorphisms")->require_subcommand(1);
    endo->fallthrough();
    auto* e_an = endo->add_subcommand("analyze", "Cyclicity, sigma invariants, progression test, modulus");
    e_an->add_option("file", file)->required();
    e_an->add_option("--d", d, "Tube dimension d");
    e_an->add_option("--a", avec, "Comma-separated base vector");
    auto* e_cmp = endo->add_subcommand("compare", "Local (and global) equivalence");
    e_cmp->add_option("f1", file)->required();
    e_cmp->add_option("f2", file2)->required();
    e_cmp->add_flag("--global", global, "Also decide global equivalence");
    auto* e_mk = endo->add_subcommand("make-tube", "Write the tube datum of (phi, d, a)");
    e_mk->add_option("file", file)->required();
    e_mk->add_option("--d", d)->required();
    e_mk->add_option("--a", avec)->required();
    e_mk->add_option("-o,--output", outfile)->required();

    auto* cr = app.add_subcommand("cralgebra", "CR-algebras")->require_subcommand(1);
    cr->fallthrough();
    auto* c_ck = cr->add_subcommand("check", "Jacobi identity, q-chain and conditions I-V");
    c_ck->add_option("file", file)->required();
    auto* c_ft = cr->add_subcommand("from-tube", "CR-algebra of a bracket-closed tube datum");
    c_ft->add_option("file", file)->required();
    c_ft->add_option("-o,--output", outfile)->required();

    auto* ca = app.add_subcommand("catalog", "Built-in fixtures")->require_subcommand(1);
    ca->fallthrough();
    auto* ca_ls = ca->add_subcommand("list", "List entry names");
    auto* ca_du = ca->add_subcommand("dump", "Print one entry as JSON");
    ca_du->add_option("name", name)->required();
    auto* ca_ve = ca->add_subcommand("verify", "Recompute expectations (default ALL)");
    ca_ve->add_option("name", name);

    for (auto* s : {t_an, t_wi, e_an, e_cmp, e_mk, c_ck, c_ft, ca_ls, ca_du, ca_ve})
        s->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return invalid;
    }

    try {
        if (t_an->parsed())
            return tube_analyze(file, o, out);
        if (t_wi->parsed())
            return tube_witness(file, o, out);
        if (e_an->parsed())
            return endo_analyze(file, d, avec, o, out);
        if (e_cmp->parsed())
            return endo_compare(file, file2, global, o, out);
        if (e_mk->parsed())
            return endo_make_tube(file, d, avec, outfile, o, out);
        if (c_ck->parsed())
            return cralgebra_check(file, o, out);
        if (c_ft->parsed())
            return cralgebra_from_tube(file, outfile, o, out);
        if (ca_ls->parsed())
            return catalog_list(o, out);
        if (ca_du->parsed())
            return catalog_dump(name, out);
        if (ca_ve->parsed())
            return catalog_verify(name, o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return invalid;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << "\n";
        return invalid;
    } catch (const out_of_range_error& e) {
        err << "error: " << e.what() << "\n";
        return invalid;
    }
    err << "error: no command\n";
    return invalid;
}

} // namespace crtube::cli
