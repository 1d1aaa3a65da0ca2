// Command-line front end: constant verification, lemma sweeps, surface
// construction, systole search, truncated Poincare series and orbit counts.
//
// Exit codes: 0 ok, 2 property violation, 3 computation error, 64 usage.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "systolic/constants.hpp"
#include "systolic/hyptrig.hpp"
#include "systolic/poincare.hpp"
#include "systolic/rng.hpp"
#include "systolic/surfaces.hpp"

using nlohmann::json;

namespace {

constexpr double kSweepLo = 0.2;  // sampling window for random lemma sweeps
constexpr double kSweepHi = 5.0;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << text;
}

json envelope(const std::string& command, json params, json results,
              std::vector<std::string> refs) {
    json j;
    j["command"] = command;
    j["params"] = std::move(params);
    j["results"] = std::move(results);
    j["paper_refs"] = std::move(refs);
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct OutputOpts {
    std::string format = "json";
    std::string path;
};

// ---------------------------------------------------------------- constants

int run_constants(const OutputOpts& out) {
    const auto reports = systolic::verify_all();
    bool all_ok = true;
    for (const auto& r : reports) all_ok = all_ok && r.ok;

    if (out.format == "csv") {
        std::string s = "name,computed,paper_value,relation,ok\n";
        for (const auto& r : reports)
            s += r.name + ',' + fmt(r.computed) + ',' + fmt(r.paper_value) + ',' +
                 systolic::relation_name(r.relation) + ',' + (r.ok ? "true" : "false") + '\n';
        write_output(s, out.path);
    } else {
        json rows = json::array();
        for (const auto& r : reports) {
            rows.push_back({{"name", r.name},
                            {"computed", r.computed},
                            {"paper_value", r.paper_value},
                            {"bracket", {r.bracket_lo, r.bracket_hi}},
                            {"tolerance", r.tolerance},
                            {"relation", systolic::relation_name(r.relation)},
                            {"ok", r.ok}});
        }
        write_output(dump(envelope("constants", json::object(), rows,
                                   {"quartic-convergence-root", "torus-exponent-constant",
                                    "pants-exponent-constant", "boundary-doubling-threshold",
                                    "bolza-systole"})),
                     out.path);
    }
    return all_ok ? 0 : 2;
}

// -------------------------------------------------------------------- lemma

struct Lemma1Row {
    double a, b, c, gamma, margin;
    bool ok;
};

struct Lemma2Row {
    double b, c, alpha, indicator, side_gap;
    bool ok;
};

int run_lemma1(std::uint64_t samples, std::uint64_t seed, const OutputOpts& out) {
    std::vector<Lemma1Row> rows(samples);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(samples); ++i) {
        systolic::Pcg32 rng(seed, static_cast<std::uint64_t>(i));
        double x = rng.uniform(kSweepLo, kSweepHi);
        double y = rng.uniform(kSweepLo, kSweepHi);
        double z = rng.uniform(kSweepLo, kSweepHi);
        // a must dominate; the other two keep their draw order.
        if (y > x) std::swap(x, y);
        if (z > x) std::swap(x, z);
        const auto hex = systolic::solve_hexagon(x, y, z);
        const double margin = systolic::lemma1_margin(hex);
        rows[i] = {x, y, z, hex.gamma, margin, margin >= -1e-12};
    }

    const auto bad = std::find_if(rows.begin(), rows.end(), [](const auto& r) { return !r.ok; });
    if (out.format == "csv") {
        std::string s = "index,a,b,c,gamma,margin,ok\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            s += std::to_string(i) + ',' + fmt(r.a) + ',' + fmt(r.b) + ',' + fmt(r.c) + ',' +
                 fmt(r.gamma) + ',' + fmt(r.margin) + ',' + (r.ok ? "true" : "false") + '\n';
        }
        write_output(s, out.path);
    } else {
        json jrows = json::array();
        for (const auto& r : rows)
            jrows.push_back({{"a", r.a},
                             {"b", r.b},
                             {"c", r.c},
                             {"gamma", r.gamma},
                             {"margin", r.margin},
                             {"ok", r.ok}});
        write_output(
            dump(envelope("lemma",
                          {{"which", 1}, {"samples", samples}, {"seed", seed}},
                          {{"rows", jrows},
                           {"violations", bad == rows.end() ? 0 : 1}},
                          {"hexagon-cosine-rule", "hexagon-opposite-inequality"})),
            out.path);
    }
    if (bad != rows.end()) {
        std::cerr << "lemma 1 violation: a=" << fmt(bad->a) << " b=" << fmt(bad->b)
                  << " c=" << fmt(bad->c) << " margin=" << fmt(bad->margin) << '\n';
        return 2;
    }
    return 0;
}

int run_lemma2(std::uint64_t samples, std::uint64_t seed, const OutputOpts& out) {
    std::vector<Lemma2Row> rows(samples);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(samples); ++i) {
        systolic::Pcg32 rng(seed, static_cast<std::uint64_t>(i));
        const double b = rng.uniform(kSweepLo, kSweepHi);
        const double c = rng.uniform(kSweepLo, kSweepHi);
        const double alpha = rng.uniform(kSweepLo, kSweepHi);
        const double ind = systolic::lemma2_indicator(b, c, alpha);
        const double gap = systolic::lemma2_side_gap(b, c, alpha);
        const bool ok = std::abs(gap) <= 1e-9 || ((ind >= 0.0) == (gap >= 0.0));
        rows[i] = {b, c, alpha, ind, gap, ok};
    }

    const auto bad = std::find_if(rows.begin(), rows.end(), [](const auto& r) { return !r.ok; });
    if (out.format == "csv") {
        std::string s = "index,b,c,alpha,indicator,side_gap,ok\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            s += std::to_string(i) + ',' + fmt(r.b) + ',' + fmt(r.c) + ',' + fmt(r.alpha) + ',' +
                 fmt(r.indicator) + ',' + fmt(r.side_gap) + ',' + (r.ok ? "true" : "false") +
                 '\n';
        }
        write_output(s, out.path);
    } else {
        json jrows = json::array();
        for (const auto& r : rows)
            jrows.push_back({{"b", r.b},
                             {"c", r.c},
                             {"alpha", r.alpha},
                             {"indicator", r.indicator},
                             {"side_gap", r.side_gap},
                             {"ok", r.ok}});
        write_output(
            dump(envelope("lemma",
                          {{"which", 2}, {"samples", samples}, {"seed", seed}},
                          {{"rows", jrows},
                           {"violations", bad == rows.end() ? 0 : 1}},
                          {"hexagon-cosine-rule", "hexagon-side-sum-criterion"})),
            out.path);
    }
    if (bad != rows.end()) {
        std::cerr << "lemma 2 violation: b=" << fmt(bad->b) << " c=" << fmt(bad->c)
                  << " alpha=" << fmt(bad->alpha) << " indicator=" << fmt(bad->indicator)
                  << " side_gap=" << fmt(bad->side_gap) << '\n';
        return 2;
    }
    return 0;
}

int run_lemma3(int depth, const OutputOpts& out) {
    struct Row {
        double l, tau;
        systolic::Lemma3Report rep;
        bool ok;
    };
    std::vector<Row> rows;
    for (double l = 2.8; l <= 6.0 + 1e-12; l += 0.4) {
        for (double tau : {0.0, l / 4.0}) {
            auto rep = systolic::lemma3_check({l, tau}, depth);
            const bool ok = !rep.threshold_ok || rep.conclusion_ok;
            rows.push_back({l, tau, std::move(rep), ok});
        }
    }
    const auto bad = std::find_if(rows.begin(), rows.end(), [](const auto& r) { return !r.ok; });
    if (out.format == "csv") {
        std::string s = "l,tau,systole,word,boundary,threshold_ok,conclusion_ok,ok\n";
        for (const auto& r : rows)
            s += fmt(r.l) + ',' + fmt(r.tau) + ',' + fmt(r.rep.systole) + ',' +
                 r.rep.systole_word.str() + ',' + fmt(r.rep.boundary) + ',' +
                 (r.rep.threshold_ok ? "true" : "false") + ',' +
                 (r.rep.conclusion_ok ? "true" : "false") + ',' + (r.ok ? "true" : "false") +
                 '\n';
        write_output(s, out.path);
    } else {
        json jrows = json::array();
        for (const auto& r : rows)
            jrows.push_back({{"l", r.l},
                            {"tau", r.tau},
                            {"systole", r.rep.systole},
                            {"word", r.rep.systole_word.str()},
                            {"boundary", r.rep.boundary},
                            {"threshold_ok", r.rep.threshold_ok},
                            {"conclusion_ok", r.rep.conclusion_ok},
                            {"ok", r.ok}});
        write_output(dump(envelope("lemma", {{"which", 3}, {"depth", depth}},
                                   {{"rows", jrows},
                                    {"violations", bad == rows.end() ? 0 : 1}},
                                   {"boundary-doubling-threshold", "torus-model"})),
                     out.path);
    }
    if (bad != rows.end()) {
        std::cerr << "lemma 3 violation: l=" << fmt(bad->l) << " tau=" << fmt(bad->tau)
                  << " systole=" << fmt(bad->rep.systole)
                  << " boundary=" << fmt(bad->rep.boundary) << '\n';
        return 2;
    }
    return 0;
}

// ------------------------------------------------------------------ surface

json matrix_json(const systolic::Isometry& m) {
    return json::array({json::array({m.m11, m.m12}), json::array({m.m21, m.m22})});
}

json params_json(const systolic::SurfaceGroup& g) {
    if (g.kind == systolic::SurfaceKind::pants) {
        const auto& p = std::get<systolic::PantsParams>(g.params);
        return {{"kind", "pants"}, {"l1", p.l1}, {"l2", p.l2}, {"l3", p.l3}};
    }
    const auto& p = std::get<systolic::TorusParams>(g.params);
    return {{"kind", "torus"}, {"l", p.l}, {"tau", p.tau}};
}

std::vector<std::string> kind_refs(systolic::SurfaceKind k, const char* extra) {
    std::vector<std::string> refs{k == systolic::SurfaceKind::pants ? "pants-hexagon-model"
                                                                    : "torus-model"};
    if (extra) refs.emplace_back(extra);
    return refs;
}

json group_json(const systolic::SurfaceGroup& g) {
    json j;
    j["kind"] = g.kind == systolic::SurfaceKind::pants ? "pants" : "torus";
    j["gen_a"] = matrix_json(g.gen_a);
    j["gen_b"] = matrix_json(g.gen_b);
    j["basepoint"] = {g.basepoint.x, g.basepoint.y};
    if (g.kind == systolic::SurfaceKind::pants) {
        j["boundary_lengths"] = {systolic::translation_length(g.gen_a),
                                 systolic::translation_length(g.gen_b),
                                 systolic::translation_length(compose(g.gen_a, g.gen_b))};
    } else {
        const auto& p = std::get<systolic::TorusParams>(g.params);
        j["cutting_length"] = p.l;
        j["twist"] = p.tau;
        j["seam_length"] = systolic::torus_seam_length(p.l);
        j["boundary_length"] =
            systolic::translation_length(commutator(g.gen_a, g.gen_b));
    }
    return j;
}

int run_surface(const systolic::SurfaceGroup& g, const OutputOpts& out) {
    const json results = group_json(g);
    if (out.format == "csv") {
        std::string s = "field,value\n";
        s += std::string("kind,") + results["kind"].get<std::string>() + '\n';
        const auto& a = results["gen_a"];
        const auto& b = results["gen_b"];
        s += "gen_a,\"" + fmt(a[0][0]) + ' ' + fmt(a[0][1]) + "; " + fmt(a[1][0]) + ' ' +
             fmt(a[1][1]) + "\"\n";
        s += "gen_b,\"" + fmt(b[0][0]) + ' ' + fmt(b[0][1]) + "; " + fmt(b[1][0]) + ' ' +
             fmt(b[1][1]) + "\"\n";
        s += "basepoint_x," + fmt(g.basepoint.x) + '\n';
        s += "basepoint_y," + fmt(g.basepoint.y) + '\n';
        if (g.kind == systolic::SurfaceKind::pants) {
            const auto& lens = results["boundary_lengths"];
            for (int i = 0; i < 3; ++i)
                s += "boundary_length_" + std::to_string(i + 1) + ',' +
                     fmt(lens[i].get<double>()) + '\n';
        } else {
            s += "cutting_length," + fmt(results["cutting_length"].get<double>()) + '\n';
            s += "twist," + fmt(results["twist"].get<double>()) + '\n';
            s += "seam_length," + fmt(results["seam_length"].get<double>()) + '\n';
            s += "boundary_length," + fmt(results["boundary_length"].get<double>()) + '\n';
        }
        write_output(s, out.path);
    } else {
        write_output(dump(envelope("surface", params_json(g), results,
                                   kind_refs(g.kind, nullptr))),
                     out.path);
    }
    return 0;
}

// ------------------------------------------------------------------ systole

int run_systole(const systolic::SurfaceGroup& g, int depth, const OutputOpts& out) {
    const auto est = systolic::systole_estimate(g, depth);
    if (out.format == "csv") {
        write_output("length,word,depth\n" + fmt(est.length) + ',' + est.word.str() + ',' +
                         std::to_string(depth) + '\n',
                     out.path);
    } else {
        json results = {{"length", est.length}, {"word", est.word.str()}, {"depth", depth}};
        json params = params_json(g);
        params["depth"] = depth;
        write_output(dump(envelope("systole", params, results,
                                   kind_refs(g.kind, "systole-lower-bound"))),
                     out.path);
    }
    return 0;
}

// ----------------------------------------------------------------- poincare

int run_poincare(const systolic::SurfaceGroup& g, double sigma, int depth,
                 bool include_identity, const OutputOpts& out) {
    const auto rep = systolic::truncated_series(g, sigma, depth, include_identity);
    const bool within =
        !rep.analytic_bound || rep.partial_sum <= *rep.analytic_bound + 1e-9;

    if (out.format == "csv") {
        std::string s =
            "sigma,depth,include_identity,systole_floor,partial_sum,analytic_bound,within_"
            "bound\n";
        s += fmt(rep.sigma) + ',' + std::to_string(rep.depth) + ',' +
             (rep.include_identity ? "true" : "false") + ',' + fmt(rep.systole_floor) + ',' +
             fmt(rep.partial_sum) + ',' +
             (rep.analytic_bound ? fmt(*rep.analytic_bound) : std::string("divergent")) + ',' +
             (within ? "true" : "false") + '\n';
        write_output(s, out.path);
    } else {
        json results = {{"sigma", rep.sigma},
                        {"depth", rep.depth},
                        {"include_identity", rep.include_identity},
                        {"systole_floor", rep.systole_floor},
                        {"partial_sum", rep.partial_sum},
                        {"within_bound", within}};
        if (rep.analytic_bound)
            results["analytic_bound"] = *rep.analytic_bound;
        else
            results["analytic_bound"] = "divergent";
        if (g.kind == systolic::SurfaceKind::torus)
            results["notes"] = json::array(
                {"bound minorizes short crossing segments by half the cutting length; a "
                 "quarter-length minorization variant exists and would weaken the denominator"});
        json params = params_json(g);
        params["sigma"] = sigma;
        params["depth"] = depth;
        params["include_identity"] = include_identity;
        write_output(dump(envelope("poincare", params, results,
                                   {"poincare-series",
                                    g.kind == systolic::SurfaceKind::pants
                                        ? "series-bound-pants"
                                        : "series-bound-torus"})),
                     out.path);
    }
    return (rep.analytic_bound && !within) ? 2 : 0;
}

// -------------------------------------------------------------------- delta

int run_delta(const systolic::SurfaceGroup& g, const std::vector<double>& radii, int depth,
              const OutputOpts& out) {
    const auto points = systolic::empirical_delta(g, radii, depth);
    const double safe = systolic::max_safe_radius(g, depth);
    if (out.format == "csv") {
        std::string s = "radius,count,ratio\n";
        for (const auto& p : points)
            s += fmt(p.radius) + ',' + std::to_string(p.count) + ',' + fmt(p.ratio) + '\n';
        write_output(s, out.path);
    } else {
        json jrows = json::array();
        for (const auto& p : points)
            jrows.push_back({{"radius", p.radius}, {"count", p.count}, {"ratio", p.ratio}});
        json params = params_json(g);
        params["depth"] = depth;
        params["radii"] = radii;
        write_output(dump(envelope("delta", params,
                                   {{"points", jrows},
                                    {"max_safe_radius", safe},
                                    {"delta_bound",
                                     systolic::delta_bound(
                                         g.kind, systolic::systole_floor(g, depth))}},
                                   {"poincare-series", "critical-exponent-bound"})),
                     out.path);
    }
    return 0;
}

// -------------------------------------------------------------------- setup

void apply_thread_env() {
#ifdef _OPENMP
    if (const char* env = std::getenv("SYSTOLIC_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) omp_set_num_threads(n);
    }
#endif
}

struct SurfaceArgs {
    std::string kind;
    double l1 = NAN, l2 = NAN, l3 = NAN;  // pants
    double l = NAN, tau = 0.0;            // torus

    // Returns nonzero usage error when required kind parameters are missing.
    int validate() const {
        if (kind == "pants" && !(std::isfinite(l1) && std::isfinite(l2) && std::isfinite(l3))) {
            std::cerr << "usage: --kind pants requires --l1, --l2 and --l3\n";
            return 64;
        }
        if (kind == "torus" && !std::isfinite(l)) {
            std::cerr << "usage: --kind torus requires --l\n";
            return 64;
        }
        return 0;
    }

    systolic::SurfaceGroup build() const {
        if (kind == "pants") return systolic::build_pants({l1, l2, l3});
        return systolic::build_torus({l, tau});
    }

    void add_options(CLI::App* cmd) {
        cmd->add_option("--kind", kind, "surface kind")
            ->required()
            ->check(CLI::IsMember({"pants", "torus"}));
        cmd->add_option("--l1", l1, "first boundary length (pants)");
        cmd->add_option("--l2", l2, "second boundary length (pants)");
        cmd->add_option("--l3", l3, "third boundary length (pants)");
        cmd->add_option("--l", l, "cutting geodesic length (torus)");
        cmd->add_option("--tau", tau, "twist along the cutting geodesic (torus)");
    }
};

}  // namespace

int main(int argc, char** argv) {
    apply_thread_env();

    CLI::App app{
        "systolic: hyperbolic-surface toolkit (hexagons, pants/torus groups, systole "
        "search, Poincare series, verified constants)"};
    app.require_subcommand(1);

    OutputOpts out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", out.path, "write output to this file instead of stdout");

    auto* c_constants = app.add_subcommand("constants", "verify the published constants");
    c_constants->fallthrough();

    auto* c_lemma = app.add_subcommand("lemma", "run a lemma property sweep");
    c_lemma->fallthrough();
    int which = 0;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    int lemma_depth = 12;
    c_lemma->add_option("--which", which, "lemma to sweep: 1, 2 or 3")
        ->required()
        ->check(CLI::Range(1, 3));
    c_lemma->add_option("--samples", samples, "random samples for lemmas 1 and 2")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{10000000}))
        ->capture_default_str();
    c_lemma->add_option("--seed", seed, "sweep seed")->capture_default_str();
    c_lemma->add_option("--depth", lemma_depth, "word depth for lemma 3")
        ->check(CLI::Range(1, 16))
        ->capture_default_str();

    auto* c_surface = app.add_subcommand("surface", "construct a surface group");
    c_surface->fallthrough();
    SurfaceArgs surf_args;
    surf_args.add_options(c_surface);

    auto* c_systole = app.add_subcommand("systole", "shortest closed geodesic up to depth");
    c_systole->fallthrough();
    SurfaceArgs sys_args;
    sys_args.add_options(c_systole);
    int sys_depth = 12;
    c_systole->add_option("--depth", sys_depth, "maximum word length")
        ->check(CLI::Range(1, 16))
        ->capture_default_str();

    auto* c_poincare =
        app.add_subcommand("poincare", "truncated Poincare series against its bound");
    c_poincare->fallthrough();
    SurfaceArgs poi_args;
    poi_args.add_options(c_poincare);
    double sigma = 0.0;
    int poi_depth = 12;
    bool include_identity = true;
    c_poincare->add_option("--sigma", sigma, "series exponent")
        ->required()
        ->check(CLI::PositiveNumber);
    c_poincare->add_option("--depth", poi_depth, "maximum word length")
        ->check(CLI::Range(1, 16))
        ->capture_default_str();
    c_poincare->add_flag("--include-identity,!--no-identity", include_identity,
                         "include the identity term");

    auto* c_delta = app.add_subcommand("delta", "orbit-count exponent estimate");
    c_delta->fallthrough();
    SurfaceArgs del_args;
    del_args.add_options(c_delta);
    std::vector<double> radii;
    int del_depth = 12;
    c_delta->add_option("--radii", radii, "increasing radii, comma separated")
        ->required()
        ->delimiter(',');
    c_delta->add_option("--depth", del_depth, "maximum word length")
        ->check(CLI::Range(1, 16))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (*c_constants) return run_constants(out);
        if (*c_lemma) {
            if (which == 1) return run_lemma1(samples, seed, out);
            if (which == 2) return run_lemma2(samples, seed, out);
            return run_lemma3(lemma_depth, out);
        }
        if (*c_surface) {
            if (int rc = surf_args.validate()) return rc;
            return run_surface(surf_args.build(), out);
        }
        if (*c_systole) {
            if (int rc = sys_args.validate()) return rc;
            return run_systole(sys_args.build(), sys_depth, out);
        }
        if (*c_poincare) {
            if (int rc = poi_args.validate()) return rc;
            return run_poincare(poi_args.build(), sigma, poi_depth, include_identity, out);
        }
        if (*c_delta) {
            if (int rc = del_args.validate()) return rc;
            return run_delta(del_args.build(), radii, del_depth, out);
        }
    } catch (const systolic::bracket_error& e) {
        std::cerr << "error: " << e.what() << " [constant: " << e.constant_name << "]\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
