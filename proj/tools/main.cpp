// harmdisk command line: membership certificates, extremal and
// hypergeometric constructions, property-suite verification, growth-envelope
// tables, and disk-image rendering. All reports are JSON on stdout.
//
// Exit codes: 0 every requested certificate passed, 1 a mathematical check
// failed, 2 input or usage error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "harmdisk/bounds.hpp"
#include "harmdisk/constructions.hpp"
#include "harmdisk/io_json.hpp"
#include "harmdisk/membership.hpp"
#include "harmdisk/render.hpp"
#include "harmdisk/verify.hpp"

namespace hd = harmdisk;
using hd::json;

namespace {

struct GridFlags {
    std::vector<double> radii;
    int angles = 0;

    hd::GridSpec resolve() const {
        hd::GridSpec grid = hd::GridSpec::default_spec();
        if (!radii.empty() || angles > 0) {
            grid = hd::GridSpec(radii.empty() ? grid.radii : radii,
                                angles > 0 ? angles : grid.angles_per_circle);
        }
        return grid;
    }
};

void add_grid_flags(CLI::App* cmd, GridFlags& flags) {
    cmd->add_option("--grid-radii", flags.radii, "Grid radii (ascending, in (0,1))")->delimiter(',');
    cmd->add_option("--grid-angles", flags.angles, "Angles per grid circle");
}

int run_check(const std::string& map_file, double alpha, double beta, const GridFlags& grid_flags,
              int lambda_count, double tolerance) {
    const hd::HarmonicMap f = hd::load_map(map_file);
    const hd::ClassParams params(alpha, beta);
    const hd::GridSpec grid = grid_flags.resolve();

    json report;
    report["artifact"] = "check";
    report["params"] = json{{"alpha", alpha}, {"beta", beta}};
    json certs = json::array();

    const hd::Certificate coeff = hd::coefficient_margin(f, params, tolerance);
    certs.push_back(hd::to_json(coeff));
    const hd::Certificate sup = hd::grid_sup_certificate(f, params, grid, tolerance);
    certs.push_back(hd::to_json(sup));
    certs.push_back(hd::to_json(hd::sense_preserving_certificate(f, grid)));
    if (sup.passed) {
        certs.push_back(hd::to_json(hd::derivative_bound_check(f, params, grid, lambda_count, tolerance)));
    }
    certs.push_back(hd::to_json(hd::injectivity_scan(f, grid)));
    report["certificates"] = certs;
    report["regime"] = hd::to_json(hd::classify(params));

    std::cout << report.dump(2) << "\n";
    return sup.passed ? 0 : 1;
}

json construct_summary(const char* kind, const std::string& out_path) {
    json j;
    j["artifact"] = "construct";
    j["kind"] = kind;
    j["output"] = out_path;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certificates, sharp bounds and constructions for a class of close-to-convex harmonic mappings"};
    app.require_subcommand(1);

    // ---- check -------------------------------------------------------------
    auto* check = app.add_subcommand("check", "Run membership certificates on a harmonic map file");
    std::string map_file;
    double alpha = 0.0, beta = 1.0, tolerance = hd::kDefaultTolerance;
    int lambda_count = hd::kDefaultLambdaCount;
    GridFlags check_grid;
    check->add_option("map", map_file, "HarmonicMap JSON file")->required();
    check->add_option("--alpha", alpha, "Class parameter alpha (> -1)")->required();
    check->add_option("--beta", beta, "Class parameter beta (> 0)")->required();
    check->add_option("--lambda-count", lambda_count, "Unimodular samples for slice sweeps");
    check->add_option("--tolerance", tolerance, "Certificate margin tolerance");
    add_grid_flags(check, check_grid);

    // ---- construct -----------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "Build a named map and write its JSON");
    construct->require_subcommand(1);
    std::string out_path;
    double c_alpha = 0.0, c_beta = 1.0;
    int extremal_n = 2;
    std::string extremal_kind;
    std::string poly_kind, hyper_kind, catalog_name;
    int poly_m = 1;
    double hg_a = 1.0, hg_b = 1.0, hg_c = 3.0;
    int truncation = hd::kDefaultTruncation;
    int catalog_degree = hd::kDefaultTruncation;

    auto* theta = construct->add_subcommand("theta", "The coefficient-sharp map with h = z + q z^2, g = -q z^2");
    theta->add_option("--alpha", c_alpha)->required();
    theta->add_option("--beta", c_beta)->required();
    theta->add_option("--out", out_path)->required();

    auto* extremal = construct->add_subcommand("extremal", "Coefficient or growth extremal");
    extremal->add_option("kind", extremal_kind, "coeff_analytic|coeff_coanalytic|growth_analytic|growth_coanalytic|theta")
        ->required();
    extremal->add_option("--n", extremal_n, "Coefficient index for coeff kinds");
    extremal->add_option("--alpha", c_alpha)->required();
    extremal->add_option("--beta", c_beta)->required();
    extremal->add_option("--out", out_path)->required();

    auto* poly = construct->add_subcommand("poly", "Harmonic polynomial family (a = b = -m)");
    poly->add_option("kind", poly_kind, "F1|F2|F3")->required();
    poly->add_option("--m", poly_m)->required();
    poly->add_option("--c", hg_c)->required();
    poly->add_option("--alpha", c_alpha);
    poly->add_option("--beta", c_beta);
    poly->add_option("--out", out_path)->required();

    auto* hyper = construct->add_subcommand("hyper", "Hypergeometric map family");
    hyper->add_option("kind", hyper_kind, "f1|f2|f3")->required();
    hyper->add_option("--a", hg_a)->required();
    hyper->add_option("--b", hg_b)->required();
    hyper->add_option("--c", hg_c)->required();
    hyper->add_option("--alpha", c_alpha);
    hyper->add_option("--beta", c_beta);
    hyper->add_option("--truncation", truncation, "Series truncation for non-terminating tails");
    hyper->add_option("--out", out_path)->required();

    auto* catalog = construct->add_subcommand("catalog", "Convex analytic series for convolution");
    catalog->add_option("name", catalog_name, "half_plane|log_map")->required();
    catalog->add_option("--degree", catalog_degree);
    catalog->add_option("--out", out_path)->required();

    // ---- verify --------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Run the seeded property suites");
    std::string suite = "all";
    std::uint64_t seed = 1;
    verify->add_option("suite", suite, "series|params|membership|bounds|specfun|constructions|all");
    verify->add_option("--seed", seed, "RNG seed");

    // ---- render --------------------------------------------------------------
    auto* render = app.add_subcommand("render", "Render the disk image of a map");
    std::string render_map_file, render_format = "svg";
    hd::RenderSpec rspec;
    render->add_option("map", render_map_file, "HarmonicMap JSON file")->required();
    render->add_option("--circles", rspec.circles);
    render->add_option("--rays", rspec.rays);
    render->add_option("--samples", rspec.samples_per_curve);
    render->add_option("--format", render_format, "svg|ppm");
    render->add_option("--out", out_path)->required();

    // ---- envelope --------------------------------------------------------------
    auto* envelope = app.add_subcommand("envelope", "Write a growth-envelope CSV table");
    int env_steps = 32;
    double env_rmax = 0.96875;
    envelope->add_option("--alpha", c_alpha)->required();
    envelope->add_option("--beta", c_beta)->required();
    envelope->add_option("--steps", env_steps);
    envelope->add_option("--r-max", env_rmax);
    envelope->add_option("--out", out_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            return run_check(map_file, alpha, beta, check_grid, lambda_count, tolerance);
        }

        if (construct->parsed()) {
            const hd::ClassParams cp(c_alpha, c_beta);
            if (theta->parsed() || extremal->parsed()) {
                hd::ExtremalKind kind = hd::ExtremalKind::theta;
                const char* name = "theta";
                if (extremal->parsed()) {
                    name = extremal_kind.c_str();
                    if (extremal_kind == "coeff_analytic") kind = hd::ExtremalKind::coeff_analytic;
                    else if (extremal_kind == "coeff_coanalytic") kind = hd::ExtremalKind::coeff_coanalytic;
                    else if (extremal_kind == "growth_analytic") kind = hd::ExtremalKind::growth_analytic;
                    else if (extremal_kind == "growth_coanalytic") kind = hd::ExtremalKind::growth_coanalytic;
                    else if (extremal_kind == "theta") kind = hd::ExtremalKind::theta;
                    else throw std::invalid_argument("unknown extremal kind: " + extremal_kind);
                }
                const hd::HarmonicMap f = hd::make_extremal(kind, extremal_n, cp);
                hd::save_map(f, out_path);
                json summary = construct_summary(name, out_path);
                summary["params"] = json{{"alpha", c_alpha}, {"beta", c_beta}, {"n", extremal_n}};
                summary["certificates"] = json::array({hd::to_json(hd::coefficient_margin(f, cp))});
                std::cout << summary.dump(2) << "\n";
                return 0;
            }
            if (poly->parsed() || hyper->parsed()) {
                hd::ConstructionSpec spec;
                json params;
                if (poly->parsed()) {
                    if (poly_kind == "F1") spec.kind = hd::ConstructionKind::poly_F1;
                    else if (poly_kind == "F2") spec.kind = hd::ConstructionKind::poly_F2;
                    else if (poly_kind == "F3") spec.kind = hd::ConstructionKind::poly_F3;
                    else throw std::invalid_argument("unknown polynomial kind: " + poly_kind);
                    spec.m = poly_m;
                    spec.c = hg_c;
                    spec.a = spec.b = -static_cast<double>(poly_m);
                    params = json{{"m", poly_m}, {"c", hg_c}};
                } else {
                    if (hyper_kind == "f1") spec.kind = hd::ConstructionKind::hyper_f1;
                    else if (hyper_kind == "f2") spec.kind = hd::ConstructionKind::hyper_f2;
                    else if (hyper_kind == "f3") spec.kind = hd::ConstructionKind::hyper_f3;
                    else throw std::invalid_argument("unknown hypergeometric kind: " + hyper_kind);
                    spec.a = hg_a;
                    spec.b = hg_b;
                    spec.c = hg_c;
                    spec.truncation = truncation;
                    params = json{{"a", spec.a}, {"b", spec.b}, {"c", spec.c}};
                }
                const hd::HarmonicMap f = hd::build(spec);
                hd::save_map(f, out_path);
                json summary = construct_summary(poly->parsed() ? poly_kind.c_str() : hyper_kind.c_str(), out_path);
                params["alpha"] = c_alpha;
                params["beta"] = c_beta;
                summary["params"] = params;
                const hd::ConditionKind ck =
                    (spec.kind == hd::ConstructionKind::hyper_f1 || spec.kind == hd::ConstructionKind::poly_F1)
                        ? hd::ConditionKind::a
                        : (spec.kind == hd::ConstructionKind::hyper_f2 || spec.kind == hd::ConstructionKind::poly_F2)
                              ? hd::ConditionKind::b
                              : hd::ConditionKind::c;
                try {
                    const hd::ConditionReport report =
                        hd::condition_margin(ck, hd::HypergeometricParams(spec.a, spec.b, spec.c), cp);
                    summary["construction"] = hd::to_json(report);
                } catch (const std::domain_error& e) {
                    summary["construction"] = json{{"error", e.what()}};
                }
                summary["certificates"] = json::array({hd::to_json(hd::coefficient_margin(f, cp))});
                std::cout << summary.dump(2) << "\n";
                return 0;
            }
            if (catalog->parsed()) {
                hd::ConvexCatalog name;
                if (catalog_name == "half_plane") name = hd::ConvexCatalog::half_plane;
                else if (catalog_name == "log_map") name = hd::ConvexCatalog::log_map;
                else throw std::invalid_argument("unknown catalog series: " + catalog_name);
                const hd::AnalyticSeries phi = hd::convex_catalog(name, catalog_degree);
                hd::save_series(phi, out_path);
                json summary = construct_summary(catalog_name.c_str(), out_path);
                summary["certificates"] = json::array(
                    {hd::to_json(hd::herglotz_check(phi, hd::GridSpec::default_spec().coarse()))});
                std::cout << summary.dump(2) << "\n";
                return 0;
            }
        }

        if (verify->parsed()) {
            const json report = hd::run_verify(suite, seed);
            std::cout << report.dump(2) << "\n";
            return hd::verify_passed(report) ? 0 : 1;
        }

        if (render->parsed()) {
            const hd::HarmonicMap f = hd::load_map(render_map_file);
            if (render_format == "svg") rspec.format = hd::RenderSpec::Format::svg;
            else if (render_format == "ppm") rspec.format = hd::RenderSpec::Format::ppm;
            else throw std::invalid_argument("unknown render format: " + render_format);
            rspec.output_path = out_path;
            const double length = hd::render_map(f, rspec);
            json summary{{"artifact", "render"},
                         {"output", out_path},
                         {"boundary_length", length},
                         {"four_pi_bound", 4.0 * 3.141592653589793}};
            std::cout << summary.dump(2) << "\n";
            return 0;
        }

        if (envelope->parsed()) {
            const hd::ClassParams cp(c_alpha, c_beta);
            if (env_steps < 2) throw std::invalid_argument("envelope table needs at least 2 steps");
            std::ofstream out(out_path);
            if (!out) throw std::invalid_argument("cannot write CSV file: " + out_path);
            out << "r,lower,upper\n";
            out.precision(17);
            for (int i = 0; i <= env_steps; ++i) {
                const double r = env_rmax * static_cast<double>(i) / static_cast<double>(env_steps);
                const hd::GrowthEnvelope env = hd::growth_envelope(r, cp);
                out << env.r << "," << env.lower << "," << env.upper << "\n";
            }
            std::cout << json{{"artifact", "envelope"}, {"output", out_path}, {"rows", env_steps + 1}}.dump(2)
                      << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
