// Command-line surface for the muimage library: exact evaluation of image
// Milnor numbers and 0-stable invariants from weights/degrees, coefficient
// interpolation, germ-level checks, catalog verification and export.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "muimage/muimage.hpp"

namespace {

using namespace muimage;

std::vector<Integer> parse_list(const std::string& text, const std::string& what) {
    std::vector<Integer> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::size_t b = part.find_first_not_of(" \t");
        std::size_t e = part.find_last_not_of(" \t");
        std::string token =
            (b == std::string::npos) ? std::string() : part.substr(b, e - b + 1);
        bool ok = !token.empty();
        for (std::size_t i = 0; i < token.size() && ok; ++i) {
            if (i == 0 && token[i] == '-' && token.size() > 1) continue;
            if (token[i] < '0' || token[i] > '9') ok = false;
        }
        if (!ok) throw ValidationError(what + ": '" + part + "' is not an integer");
        out.push_back(Integer(token));
    }
    if (out.empty()) throw ValidationError(what + ": empty list");
    return out;
}

std::string join_integers(const std::vector<Integer>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].str();
    }
    return out;
}

// ---------------------------------------------------------------- eval ----

int cmd_eval(const std::string& weights, const std::string& degrees, bool slices,
             bool assume_normal_form) {
    Grading g(parse_list(weights, "--weights"), parse_list(degrees, "--degrees"));
    std::size_t n = g.n();
    std::cout << "n = " << n << "\n";
    std::cout << "weights = " << join_integers(g.weights()) << "\n";
    std::cout << "degrees = " << join_integers(g.degrees()) << "\n";
    ChernData cd = chern_data(g);
    for (std::size_t k = 1; k <= n; ++k)
        std::cout << "sigma." << k << " = " << cd.sigma[k].str() << "\n";
    for (std::size_t k = 1; k <= n + 1; ++k)
        std::cout << "delta." << k << " = " << cd.delta[k].str() << "\n";
    for (std::size_t k = 0; k <= n; ++k)
        std::cout << "c." << k << " = " << cd.c[k].str() << "\n";
    std::cout << "s_0 = " << cd.s0.str() << "\n";

    if (n < 2 || n > 5) {
        std::cout << "# mu_I and 0-stable invariants are available for 2 <= n <= 5 only\n";
        return 0;
    }
    InvariantReport rep = invariant_report(g, assume_normal_form);
    if (rep.mu)
        std::cout << "mu_I = " << rep.mu->str() << "\n";
    else
        std::cout << "# mu_I unavailable: " << rep.mu_error << "\n";
    if (slices)
        std::cout << "# warn: invariants below dimension " << n
                  << " are slice values; they assume a corank <= 1 normal form\n";
    for (const InvariantEntry& e : rep.entries) {
        if (!slices && label_dimension(e.label) < n) continue;
        if (e.value)
            std::cout << "inv." << label_name(e.label) << " = " << e.value->str() << "\n";
        else
            std::cout << "# inv." << label_name(e.label) << " unavailable: " << e.error << "\n";
    }
    auto flags = integrality_screen(g);
    for (const ScreenFlag& f : flags) {
        std::cout << "# flag: " << f.item << " = " << f.value.str() << " is";
        if (f.non_integral) std::cout << " non-integral";
        if (f.non_integral && f.negative) std::cout << " and";
        if (f.negative) std::cout << " negative";
        std::cout << "\n";
    }
    std::cout << "screen = " << (flags.empty() ? "clean" : "flagged") << "\n";
    return 0;
}

// --------------------------------------------------------- interpolate ----

int cmd_interpolate(const std::string& samples_path, unsigned max_degree, bool verify,
                    const std::vector<std::string>& drop, const std::vector<std::string>& only,
                    bool cumulative, bool formula) {
    const Catalog& cat_builtin = builtin_catalog();
    Catalog cat_file;
    const Catalog* cat = &cat_builtin;
    if (!samples_path.empty()) {
        cat_file = load_samples_file(samples_path);
        cat = &cat_file;
    }
    std::set<std::string> drop_set(drop.begin(), drop.end());
    std::set<std::string> only_set(only.begin(), only.end());
    for (const std::string& name : drop)
        if (!cat->find(name)) throw ValidationError("--drop: unknown sample '" + name + "'");
    for (const std::string& name : only)
        if (!cat->find(name)) throw ValidationError("--only: unknown sample '" + name + "'");

    auto rows = interpolation_rows(*cat, max_degree, drop_set, only_set);
    std::cout << "rows = " << rows.size() << "\n";
    InterpolationResult res = solve_coefficients(rows, max_degree, cumulative);
    for (std::size_t i = 0; i < res.trace.size(); ++i)
        std::cout << "trace." << i << " = " << res.trace[i].second << " (" << res.trace[i].first
                  << ")\n";
    std::cout << "rank = " << res.rank << "\n";

    if (!res.inconsistent_row.empty()) {
        std::cout << "status = inconsistent\n";
        std::cout << "inconsistent_row = " << res.inconsistent_row << "\n";
        return 2;
    }
    if (!res.solved) {
        std::cout << "status = underdetermined\n";
        std::string free_list;
        for (const MultiIndex& m : res.free_indices) {
            if (!free_list.empty()) free_list += " ";
            free_list += m.b_name();
        }
        std::cout << "free = " << free_list << "\n";
        for (std::size_t i = 0; i < res.kernel.size(); ++i) {
            std::string line;
            for (const auto& [m, v] : res.kernel[i]) {
                if (v.is_zero()) continue;
                if (!line.empty()) line += ", ";
                line += m.b_name() + "=" + v.str();
            }
            std::cout << "kernel." << i << " = " << line << "\n";
        }
        if (verify) {
            std::cout << "verify = failed (underdetermined)\n";
            return 2;
        }
        return 0;
    }
    std::cout << "status = solved\n";
    for (const MultiIndex& m : enumerate_multi_indices(max_degree))
        std::cout << m.b_name() << " = " << res.table.at(m).str() << "\n";
    if (formula)
        for (std::size_t fn = 2; fn <= max_degree && fn <= 5; ++fn)
            std::cout << "formula.n" << fn << " = " << render_formula(res.table, fn) << "\n";
    if (verify) {
        const CoeffTable& reference = builtin_b_table();
        auto indices = enumerate_multi_indices(max_degree);
        std::size_t matches = 0;
        for (const MultiIndex& m : indices) {
            if (res.table.at(m) == reference.at(m)) {
                ++matches;
            } else {
                std::cout << "# mismatch " << m.b_name() << ": expected " << reference.at(m).str()
                          << ", got " << res.table.at(m).str() << "\n";
            }
        }
        std::cout << matches << "/" << indices.size() << " coefficients match\n";
        return matches == indices.size() ? 0 : 2;
    }
    return 0;
}

// ---------------------------------------------------------------- germ ----

struct GermInput {
    MapGerm map;
    std::optional<Grading> grading;
    std::string origin;
};

GermInput resolve_germ(const std::string& name, const std::string& file) {
    if (name.empty() == file.empty())
        throw ValidationError("exactly one of --name and --file is required");
    if (!file.empty()) {
        Catalog cat = load_samples_file(file);
        if (cat.empty()) throw ValidationError("file '" + file + "' contains no samples");
        const Sample& s = cat.samples().front();
        if (!s.map)
            throw ValidationError("sample '" + s.name + "' in '" + file +
                                  "' stores no map (keys 'vars' and 'map')");
        return {*s.map, s.grading, s.name};
    }
    const Catalog& cat = builtin_catalog();
    const Sample* s = cat.find(name);
    if (!s) {
        for (int i = 1; i <= 9 && !s; ++i) {
            const Sample* t = cat.find("tau_" + std::to_string(i) + "(" + name + ")");
            if (t && t->map) s = t;
        }
    }
    if (!s) throw ValidationError("unknown sample '" + name + "'");
    if (!s->map) throw ValidationError("sample '" + s->name + "' stores no representative map");
    return {*s->map, s->grading, s->name};
}

int cmd_germ_check(const GermInput& in, const std::string& weights,
                   const std::string& degrees) {
    std::optional<Grading> g;
    if (!weights.empty() || !degrees.empty()) {
        if (weights.empty() || degrees.empty())
            throw ValidationError("--weights and --degrees must be given together");
        g = Grading(parse_list(weights, "--weights"), parse_list(degrees, "--degrees"));
    } else {
        g = in.grading;
    }
    if (!g) throw ValidationError("no grading available; pass --weights/--degrees");
    std::cout << "sample = " << in.origin << "\n";
    std::cout << "weights = " << join_integers(g->weights()) << "\n";
    std::cout << "degrees = " << join_integers(g->degrees()) << "\n";
    HomogeneityCheck hc = check_weighted_homogeneous(in.map, *g);
    std::cout << "homogeneous = " << (hc.ok ? "true" : "false") << "\n";
    if (!hc.ok) {
        std::cout << "witness.component = " << (hc.witness->component + 1) << "\n";
        std::cout << "witness.monomial = " << hc.witness->monomial << "\n";
        return 2;
    }
    return 0;
}

int cmd_germ_grading(const GermInput& in) {
    std::cout << "sample = " << in.origin << "\n";
    GradingInference gi = infer_grading(in.map);
    std::cout << "cone_dim = " << gi.cone_dim << "\n";
    if (gi.unique) {
        std::cout << "weights = " << join_integers(gi.unique->weights()) << "\n";
        std::cout << "degrees = " << join_integers(gi.unique->degrees()) << "\n";
        return 0;
    }
    std::cout << "# " << gi.note << "\n";
    std::string unknowns;
    for (const std::string& v : in.map.vars) unknowns += "w_" + v + ",";
    for (std::size_t i = 0; i <= in.map.vars.size(); ++i) {
        unknowns += "d_" + std::to_string(i);
        if (i < in.map.vars.size()) unknowns += ",";
    }
    std::cout << "unknowns = " << unknowns << "\n";
    for (std::size_t i = 0; i < gi.basis.size(); ++i) {
        std::string line;
        for (std::size_t j = 0; j < gi.basis[i].size(); ++j) {
            if (j) line += ",";
            line += gi.basis[i][j].str();
        }
        std::cout << "basis." << i << " = " << line << "\n";
    }
    return gi.cone_dim == 0 ? 2 : 0;
}

int cmd_germ_multipoints(const GermInput& in, unsigned k, const std::string& style) {
    IdealPresentation ip = multiple_point_ideal(in.map, k);
    IdealStyle st;
    if (style == "plain")
        st = IdealStyle::Plain;
    else if (style == "script")
        st = IdealStyle::Script;
    else
        throw ValidationError("--style must be 'plain' or 'script'");
    std::cout << emit_ideal(ip, st);
    return 0;
}

// -------------------------------------------------------------- verify ----

int cmd_verify(const std::string& samples_path, std::optional<std::size_t> only_n) {
    const Catalog& cat_builtin = builtin_catalog();
    Catalog cat_file;
    const Catalog* cat = &cat_builtin;
    if (!samples_path.empty()) {
        cat_file = load_samples_file(samples_path);
        cat = &cat_file;
    }
    auto checks = verify_catalog(*cat, only_n);
    std::size_t failures = 0;
    for (const VerifyCheck& chk : checks) {
        if (chk.ok) {
            std::cout << "check." << chk.sample << "." << chk.item << " = ok\n";
        } else {
            ++failures;
            std::cout << "check." << chk.sample << "." << chk.item << " = FAIL (expected "
                      << chk.expected << ", got " << chk.got << ")\n";
        }
    }
    std::cout << "checks = " << checks.size() << "\n";
    std::cout << "failures = " << failures << "\n";
    return failures == 0 ? 0 : 2;
}

// ------------------------------------------------------------- catalog ----

int cmd_catalog_list() {
    for (const Sample& s : builtin_catalog().samples()) {
        std::cout << s.name << "  n=" << s.grading.n() << "  mu=";
        switch (s.mu_kind) {
            case MuKind::Finite: std::cout << s.mu.str(); break;
            case MuKind::Infinite: std::cout << "inf"; break;
            case MuKind::Unknown: std::cout << "unknown"; break;
        }
        if (s.stable) std::cout << "  stable";
        if (s.map) std::cout << "  map";
        std::cout << "\n";
    }
    return 0;
}

int cmd_catalog_show(const std::string& name) {
    const Sample* s = builtin_catalog().find(name);
    if (!s) throw ValidationError("unknown sample '" + name + "'");
    Catalog one;
    one.add(*s);
    std::cout << save_samples(one);
    return 0;
}

int cmd_catalog_export(const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << save_samples(builtin_catalog());
        return 0;
    }
    save_samples_file(builtin_catalog(), out_path);
    std::cout << "wrote " << builtin_catalog().size() << " samples to " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of weighted-homogeneous map-germs (C^n,0) -> (C^n+1,0)"};
    app.require_subcommand(1);

    // eval
    std::string weights, degrees;
    bool slices = false, no_normal_form = false;
    auto* eval = app.add_subcommand(
        "eval", "evaluate chern data, mu_I and 0-stable invariants of a grading");
    eval->add_option("--weights", weights, "comma-separated source weights")->required();
    eval->add_option("--degrees", degrees, "comma-separated target degrees (n+1 entries)")
        ->required();
    eval->add_flag("--slices", slices, "also evaluate invariants below dimension n via slices");
    eval->add_flag("--no-normal-form", no_normal_form,
                   "do not assume a corank <= 1 normal form (disables slice values)");

    // interpolate
    std::string samples_path;
    unsigned max_degree = 5;
    bool verify_flag = false, cumulative = false, formula = false;
    std::vector<std::string> drop, only;
    auto* interp = app.add_subcommand(
        "interpolate", "re-derive the universal coefficient table from sample equations");
    interp->add_option("--samples", samples_path, "sample file (default: builtin catalog)");
    interp->add_option("--max-degree", max_degree, "largest multi-index degree (2..5)")
        ->check(CLI::Range(2u, 5u));
    interp->add_flag("--verify", verify_flag,
                     "compare the solved table against the builtin coefficients");
    interp->add_option("--drop", drop, "exclude a sample by name (repeatable)");
    interp->add_option("--only", only, "restrict to the named samples (repeatable)");
    interp->add_flag("--cumulative", cumulative, "solve degree by degree instead of jointly");
    interp->add_flag("--formula", formula, "print the solved closed formulas for each n");

    // germ
    auto* germ = app.add_subcommand("germ", "germ-level operations on stored representatives");
    germ->require_subcommand(1);
    std::string g_name, g_file, g_weights, g_degrees, g_style = "plain";
    unsigned g_k = 0;
    auto* gcheck = germ->add_subcommand("check", "check weighted homogeneity against a grading");
    auto* ggrading = germ->add_subcommand("grading", "infer the grading from the map alone");
    auto* gmulti =
        germ->add_subcommand("multipoints", "emit multiple-point ideal generators");
    for (CLI::App* sub : {gcheck, ggrading, gmulti}) {
        sub->add_option("--name", g_name, "builtin sample name (tau_i(...) resolved)");
        sub->add_option("--file", g_file, "sample file; the first sample is used");
    }
    gcheck->add_option("--weights", g_weights, "override weights for the check");
    gcheck->add_option("--degrees", g_degrees, "override degrees for the check");
    gmulti->add_option("--k", g_k, "multiplicity of the multiple-point locus (>= 2)")
        ->required()
        ->check(CLI::Range(2u, 64u));
    gmulti->add_option("--style", g_style, "output style: plain | script");

    // verify
    std::string v_samples;
    std::optional<std::size_t> v_n;
    std::size_t v_n_raw = 0;
    auto* verify = app.add_subcommand(
        "verify", "recompute every stored catalog value and report a pass/fail matrix");
    verify->add_option("--samples", v_samples, "sample file (default: builtin catalog)");
    auto* vnopt = verify->add_option("--n", v_n_raw, "restrict to samples with this source dimension");

    // catalog
    auto* catalog = app.add_subcommand("catalog", "inspect or export the builtin catalog");
    catalog->require_subcommand(1);
    auto* clist = catalog->add_subcommand("list", "one line per sample");
    std::string c_name, c_out;
    auto* cshow = catalog->add_subcommand("show", "print one sample block");
    cshow->add_option("--name", c_name, "sample name")->required();
    auto* cexport = catalog->add_subcommand("export", "write the catalog in the sample format");
    cexport->add_option("--out", c_out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval) return cmd_eval(weights, degrees, slices, !no_normal_form);
        if (*interp)
            return cmd_interpolate(samples_path, max_degree, verify_flag, drop, only, cumulative,
                                   formula);
        if (*gcheck) return cmd_germ_check(resolve_germ(g_name, g_file), g_weights, g_degrees);
        if (*ggrading) return cmd_germ_grading(resolve_germ(g_name, g_file));
        if (*gmulti) return cmd_germ_multipoints(resolve_germ(g_name, g_file), g_k, g_style);
        if (*verify) {
            if (vnopt->count() > 0) v_n = v_n_raw;
            return cmd_verify(v_samples, v_n);
        }
        if (*clist) return cmd_catalog_list();
        if (*cshow) return cmd_catalog_show(c_name);
        if (*cexport) return cmd_catalog_export(c_out);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
