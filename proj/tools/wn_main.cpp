// Command-line driver for the W(n) engine: construction, cohomology tables,
// representation data and the verification suites, with machine-readable
// output under --json.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>

#include "wn/checks.hpp"
#include "wn/cohomology.hpp"
#include "wn/modules.hpp"

using json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    bool json = false;
    bool timings = false;
    std::uint64_t seed = 42;
    std::uint64_t limit = 200000;

    wn::Caps caps() const { return wn::Caps{limit, 25 * limit}; }
};

struct NRange {
    int lo = 2, hi = 2;
};

NRange parse_n_range(const std::string& text) {
    NRange r;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (...) {
        throw wn::InvalidInput("cannot parse rank range '" + text + "'");
    }
    if (r.lo < 2 || r.hi < r.lo) throw wn::InvalidInput("invalid rank range '" + text + "'");
    return r;
}

json hilbert_json(const wn::HilbertTable& t) {
    json dims = json::object();
    for (const auto& [p, d] : t.dims) dims[std::to_string(p)] = d;
    json out;
    out["n"] = t.n;
    out["pair"] = t.label;
    out["dims"] = dims;
    out["cutoff"] = t.cutoff;
    out["status"] = t.truncated ? "truncated" : "complete";
    if (t.truncated) out["truncated_at"] = t.truncated_at;
    return out;
}

void print_hilbert(const wn::HilbertTable& t, const GlobalOpts& g) {
    if (g.json)
        std::cout << hilbert_json(t).dump() << "\n";
    else
        std::cout << t.to_text();
}

json element_json(const wn::WAlgebra& w, const wn::WElement& x) {
    json out = json::object();
    for (const auto& [idx, c] : x.coords) out[w.name(idx)] = c.to_string();
    return out;
}

int emit_report(const GlobalOpts& g, const std::string& status, const json& payload,
                double millis) {
    if (g.json) {
        json rep;
        rep["status"] = status;
        rep["payload"] = payload;
        if (g.timings) rep["timing_ms"] = millis;
        std::cout << rep.dump() << "\n";
    }
    if (status == "fail") return 1;
    return 0;
}

wn::Supermodule module_by_name(const wn::WAlgebra& w, const std::string& kind,
                               const std::string& weight_text) {
    if (kind == "trivial") return wn::trivial_module(w);
    wn::Weight lambda = wn::parse_weight(weight_text, w.n());
    if (kind == "kac") return wn::kac_module(w, lambda);
    if (kind == "simple") return wn::simple_supermodule(w, lambda);
    throw wn::InvalidInput("unknown module kind '" + kind + "' (trivial|kac|simple)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for the Cartan-type Lie superalgebra W(n)"};
    app.require_subcommand(1);
    app.fallthrough();   // let --json/--seed/--limit appear after the subcommand

    GlobalOpts g;
    app.add_flag("--json", g.json, "emit machine-readable JSON");
    app.add_flag("--timings", g.timings, "include timings in JSON output");
    app.add_option("--seed", g.seed, "seed for sampled checks");
    app.add_option("--limit", g.limit, "cap on materialized wedge-space coordinates");

    std::string n_text = "2";
    std::string pair_text = "g:g0";
    std::string weight_text;
    std::string suite = "all";
    std::string module_kind = "trivial";
    std::vector<std::string> point_texts;
    std::string arg_x, arg_y;
    int max_degree = 8;
    int random_samples = 8;

    auto* c_info = app.add_subcommand("info", "dimensions and gradings of W(n)");
    c_info->add_option("--n", n_text, "rank (or range a..b)")->required();

    auto* c_bracket = app.add_subcommand("bracket", "bracket of two basis monomials");
    c_bracket->add_option("--n", n_text, "rank")->required();
    c_bracket->add_option("x", arg_x, "first monomial, e.g. xi{1}d2")->required();
    c_bracket->add_option("y", arg_y, "second monomial, e.g. xi{2}d1")->required();

    auto* c_cohom = app.add_subcommand("cohomology", "relative cohomology dimensions");
    c_cohom->add_option("--n", n_text, "rank")->required();
    c_cohom->add_option("--pair", pair_text, "g:g0 | f:f0 | ftilde:ftilde0");
    c_cohom->add_option("--max-degree", max_degree, "top degree");

    auto* c_inv = app.add_subcommand("invariants", "invariant-ring Hilbert table");
    c_inv->add_option("--n", n_text, "rank")->required();
    c_inv->add_option("--max-degree", max_degree, "top degree");

    auto* c_cut = app.add_subcommand("cut-check", "compare full and truncated invariants");
    c_cut->add_option("--n", n_text, "rank")->required();
    c_cut->add_option("--max-degree", max_degree, "top degree");

    auto* c_res = app.add_subcommand("restriction", "restriction map to the detecting subalgebra");
    c_res->add_option("--n", n_text, "rank")->required();
    c_res->add_option("--max-degree", max_degree, "top degree");

    auto* c_kac = app.add_subcommand("kac", "Kac supermodule data");
    c_kac->add_option("--n", n_text, "rank")->required();
    c_kac->add_option("--weight", weight_text, "highest weight, e.g. 2,0")->required();

    auto* c_simple = app.add_subcommand("simple", "simple supermodule data");
    c_simple->add_option("--n", n_text, "rank")->required();
    c_simple->add_option("--weight", weight_text, "highest weight")->required();

    auto* c_atyp = app.add_subcommand("atypical", "typicality of a weight");
    c_atyp->add_option("--n", n_text, "rank")->required();
    c_atyp->add_option("--weight", weight_text, "weight, rational entries allowed")->required();

    auto* c_rank = app.add_subcommand("rank-variety", "projectivity sampling over f~_1");
    c_rank->add_option("--n", n_text, "rank")->required();
    c_rank->add_option("--module", module_kind, "trivial | kac | simple");
    c_rank->add_option("--weight", weight_text, "highest weight for kac/simple");
    c_rank->add_option("--point", point_texts, "extra sample point, e.g. a=1,c2=1");
    c_rank->add_option("--samples", random_samples, "number of seeded random points");

    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("suite", suite, "jacobi|complex|cut|hilbert|detecting|kac|supports|all");
    c_verify->add_option("--n", n_text, "rank or range, e.g. 2..3")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const auto started = std::chrono::steady_clock::now();
    auto elapsed_ms = [&]() {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         started)
            .count();
    };

    try {
        NRange nr = parse_n_range(n_text);

        if (c_info->parsed()) {
            json payload = json::array();
            for (int n = nr.lo; n <= nr.hi; ++n) {
                const wn::WAlgebra& w = wn::build_wn(n);
                json graded = json::object();
                for (int k = -1; k <= n - 1; ++k)
                    graded[std::to_string(k)] = w.graded_dim(k);
                json row;
                row["n"] = n;
                row["dim"] = w.dim();
                row["graded"] = graded;
                payload.push_back(row);
                if (!g.json) {
                    std::cout << "W(" << n << "): dim " << w.dim() << ", graded dims";
                    for (int k = -1; k <= n - 1; ++k) std::cout << " " << w.graded_dim(k);
                    std::cout << "\n";
                }
            }
            return emit_report(g, "pass", payload, elapsed_ms());
        }

        if (c_bracket->parsed()) {
            const wn::WAlgebra& w = wn::build_wn(nr.lo);
            wn::WElement x = w.basis_element(w.parse_basis_name(arg_x));
            wn::WElement y = w.basis_element(w.parse_basis_name(arg_y));
            wn::WElement br = w.bracket(x, y);
            if (!g.json)
                std::cout << "[" << arg_x << ", " << arg_y << "] = " << w.to_string(br) << "\n";
            json payload;
            payload["x"] = arg_x;
            payload["y"] = arg_y;
            payload["result"] = element_json(w, br);
            return emit_report(g, "pass", payload, elapsed_ms());
        }

        if (c_cohom->parsed()) {
            const wn::WAlgebra& w = wn::build_wn(nr.lo);
            wn::HilbertTable t = wn::cohomology_table(w, wn::parse_pair(pair_text),
                                                      wn::trivial_module(w), max_degree, g.caps());
            print_hilbert(t, g);
            return t.truncated ? emit_report(g, "truncated", json::object(), elapsed_ms()) : 0;
        }

        if (c_inv->parsed()) {
            const wn::WAlgebra& w = wn::build_wn(nr.lo);
            wn::HilbertTable t = wn::invariant_hilbert_table(w, max_degree, g.caps());
            print_hilbert(t, g);
            return t.truncated ? emit_report(g, "truncated", json::object(), elapsed_ms()) : 0;
        }

        if (c_cut->parsed()) {
            const wn::WAlgebra& w = wn::build_wn(nr.lo);
            bool all_equal = true;
            json rows = json::array();
            for (int p = 0; p <= max_degree; ++p) {
                wn::CutCheckReport rep = wn::verify_cut_theorem(w, p, g.caps());
                all_equal = all_equal && rep.equal;
                json row;
                row["p"] = p;
                row["full"] = rep.full_dim;
                row["truncated"] = rep.truncated_dim;
                row["equal"] = rep.equal;
                rows.push_back(row);
                if (!g.json)
                    std::cout << "p=" << p << ": full " << rep.full_dim << ", truncated "
                              << rep.truncated_dim << (rep.equal ? " (equal)" : " (MISMATCH)")
                              << "\n";
            }
            return emit_report(g, all_equal ? "pass" : "fail", rows, elapsed_ms());
        }

        if (c_res->parsed()) {
            const wn::WAlgebra& w = wn::build_wn(nr.lo);
            bool ok = true;
            json rows = json::array();
            for (int p = 0; p <= max_degree; ++p) {
                wn::RestrictionReport rep = wn::restriction_map(w, p, g.caps());
                ok = ok && rep.injective && rep.image_matches;
                json row;
                row["p"] = p;
                row["source_dim"] = rep.source_dim;
                row["target_dim"] = rep.target_dim;
                row["image_dim"] = rep.image_dim;
                row["sigma_invariant_dim"] = rep.sigma_invariant_dim;
                row["injective"] = rep.injective;
                rows.push_back(row);
                if (!g.json)
                    std::cout << "p=" << p << ": H(g) dim " << rep.source_dim << " -> H(f) dim "
                              << rep.target_dim << ", image " << rep.image_dim
                              << ", Sigma-invariants " << rep.sigma_invariant_dim
                              << (rep.injective && rep.image_matches ? "" : " (MISMATCH)") << "\n";
            }
            return emit_report(g, ok ? "pass" : "fail", rows, elapsed_ms());
        }

        if (c_kac->parsed() || c_simple->parsed()) {
            const wn::WAlgebra& w = wn::build_wn(nr.lo);
            wn::Weight lambda = wn::parse_weight(weight_text, w.n());
            wn::Supermodule l0 = wn::simple_gl_module(w, lambda);
            wn::Supermodule k = wn::kac_module(w, lambda);
            wn::Subspace rad = wn::maximal_proper_submodule(w, k, lambda);
            wn::AtypicalityTag tag = wn::atypicality(lambda);
            json payload;
            payload["weight"] = wn::weight_label(lambda);
            payload["dim_L0"] = l0.dim();
            payload["dim_kac"] = k.dim();
            payload["dim_radical"] = rad.dim();
            payload["dim_simple"] = k.dim() - rad.dim();
            payload["typicality"] = tag.to_string();
            if (!g.json) {
                std::cout << "lambda = (" << wn::weight_label(lambda) << "): dim L0 = " << l0.dim()
                          << ", dim K = " << k.dim() << ", dim radical = " << rad.dim()
                          << ", dim L = " << (k.dim() - rad.dim()) << ", " << tag.to_string()
                          << "\n";
            }
            return emit_report(g, "pass", payload, elapsed_ms());
        }

        if (c_atyp->parsed()) {
            const wn::WAlgebra& w = wn::build_wn(nr.lo);
            wn::Weight lambda = wn::parse_weight(weight_text, w.n());
            wn::AtypicalityTag tag = wn::atypicality(lambda);
            if (!g.json) {
                std::cout << tag.to_string();
                if (tag.atypical)
                    std::cout << " (a = " << tag.a.to_string() << ", i = " << tag.i << ")";
                std::cout << "\n";
            }
            json payload;
            payload["weight"] = wn::weight_label(lambda);
            payload["typicality"] = tag.to_string();
            if (tag.atypical) {
                payload["witness_a"] = tag.a.to_string();
                payload["witness_i"] = tag.i;
            }
            return emit_report(g, "pass", payload, elapsed_ms());
        }

        if (c_rank->parsed()) {
            const wn::WAlgebra& w = wn::build_wn(nr.lo);
            wn::Supermodule m = module_by_name(w, module_kind, weight_text);
            wn::RankVarietyReport rep = wn::rank_variety_report(w, m, random_samples, g.seed);
            json samples = json::array();
            for (const auto& s : rep.samples) {
                json row;
                row["point"] = s.point.to_string();
                row["projective"] = s.projective;
                samples.push_back(row);
            }
            json extra = json::array();
            for (const std::string& ptext : point_texts) {
                wn::FTildePoint pt = wn::parse_point(ptext, w.n());
                json row;
                row["point"] = pt.to_string();
                row["projective"] = wn::projective_over(w, pt, m);
                extra.push_back(row);
            }
            json payload;
            payload["module"] = rep.module_tag;
            payload["verdict"] = wn::verdict_label(rep.verdict);
            payload["samples"] = samples;
            if (!extra.empty()) payload["extra_points"] = extra;
            if (!g.json) {
                std::cout << rep.module_tag << ": " << wn::verdict_label(rep.verdict) << " ("
                          << rep.samples.size() << " points)\n";
                for (const auto& s : rep.samples)
                    std::cout << "  " << s.point.to_string() << " -> "
                              << (s.projective ? "projective" : "not projective") << "\n";
                for (const auto& row : extra)
                    std::cout << "  " << row["point"].get<std::string>() << " -> "
                              << (row["projective"].get<bool>() ? "projective" : "not projective")
                              << "\n";
            }
            return emit_report(g, "pass", payload, elapsed_ms());
        }

        if (c_verify->parsed()) {
            wn::checks::SuiteResult res = wn::checks::run_suite(suite, nr.lo, nr.hi, g.seed,
                                                                g.caps());
            json rows = json::array();
            for (const auto& c : res.checks) {
                json row;
                row["id"] = c.id;
                row["pass"] = c.pass;
                row["detail"] = c.detail;
                if (g.timings) row["ms"] = c.millis;
                rows.push_back(row);
                if (!g.json)
                    std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << " — " << c.detail << "\n";
            }
            json payload;
            payload["suite"] = res.suite;
            payload["checks"] = rows;
            if (!g.json)
                std::cout << (res.pass() ? "suite passed" : "SUITE FAILED") << " ("
                          << res.checks.size() << " checks)\n";
            return emit_report(g, res.pass() ? "pass" : "fail", payload, elapsed_ms());
        }

        std::cerr << "no subcommand\n";
        return 2;
    } catch (const wn::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wn::UnsupportedRank& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wn::ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        json payload;
        payload["message"] = e.what();
        emit_report(g, "truncated", payload, 0.0);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    }
}
