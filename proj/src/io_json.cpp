#include "harmdisk/io_json.hpp"

#include <fstream>
#include <stdexcept>

namespace harmdisk {

json to_json(const AnalyticSeries& s) {
    json arr = json::array();
    for (const complex_t& c : s.coeffs()) {
        arr.push_back(json::array({c.real(), c.imag()}));
    }
    return arr;
}

json to_json(const HarmonicMap& f) {
    return json{{"h", to_json(f.h())}, {"g", to_json(f.g())}};
}

json to_json(const GridSpec& grid) {
    return json{{"radii", grid.radii},
                {"angles_per_circle", grid.angles_per_circle},
                {"max_radius", grid.max_radius()}};
}

json to_json(const Certificate& c) {
    json j{{"method", to_string(c.method)}, {"margin", c.margin}, {"passed", c.passed},
           {"tolerance", c.tolerance}};
    if (c.grid) j["grid"] = to_json(*c.grid);
    if (c.lambda_count) j["lambda_count"] = *c.lambda_count;
    if (c.truncation_degree) j["truncation_degree"] = *c.truncation_degree;
    return j;
}

json to_json(const RegimeReport& r) {
    json j{{"alpha", r.alpha},
           {"beta", r.beta},
           {"mode", r.mode == StarlikeMode::continuous ? "continuous" : "literal"},
           {"close_to_convex", r.close_to_convex},
           {"convex", r.convex}};
    if (r.starlike) {
        j["starlike"] = *r.starlike;
    } else {
        j["starlike"] = "unknown";
    }
    json thresholds{{"close_to_convex", r.beta_max_ctc}, {"convex", r.beta_max_cvx}};
    if (r.beta_max_star) {
        thresholds["starlike"] = *r.beta_max_star;
    } else {
        thresholds["starlike"] = nullptr;
    }
    j["threshold"] = thresholds;
    return j;
}

json to_json(const GrowthEnvelope& env) {
    return json{{"r", env.r}, {"lower", env.lower}, {"upper", env.upper}};
}

json to_json(const IdentityCheck& check) {
    json j{{"closed_form", check.closed_form},
           {"oracle_value", check.oracle_value},
           {"abs_gap", check.abs_gap},
           {"terms_used", check.terms_used},
           {"slow_convergence", check.slow_convergence}};
    if (check.literal_closed_form) j["literal_closed_form"] = *check.literal_closed_form;
    return j;
}

json to_json(const ConditionReport& report) {
    const char* kind = report.kind == ConditionKind::a ? "a" : report.kind == ConditionKind::b ? "b" : "c";
    return json{{"kind", kind},
                {"margin", report.margin},
                {"coefficient_margin_crosscheck", report.coefficient_margin_crosscheck},
                {"gauss_value", report.gauss_value},
                {"tail_bound", report.tail_bound},
                {"truncation_degree", report.truncation_degree}};
}

AnalyticSeries series_from_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("series JSON must be a nonempty array of [re, im] pairs");
    }
    std::vector<complex_t> coeffs;
    coeffs.reserve(j.size());
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
            throw std::invalid_argument("series coefficients must be [re, im] number pairs");
        }
        coeffs.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return AnalyticSeries(std::move(coeffs));
}

HarmonicMap map_from_json(const json& j) {
    if (!j.is_object() || !j.contains("h") || !j.contains("g")) {
        throw std::invalid_argument("harmonic map JSON must carry \"h\" and \"g\" series");
    }
    try {
        return HarmonicMap(series_from_json(j["h"]), series_from_json(j["g"]));
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(e.what());
    }
}

GridSpec grid_from_json(const json& j) {
    if (!j.is_object() || !j.contains("radii") || !j.contains("angles_per_circle")) {
        throw std::invalid_argument("grid JSON must carry \"radii\" and \"angles_per_circle\"");
    }
    try {
        return GridSpec(j["radii"].get<std::vector<double>>(), j["angles_per_circle"].get<int>());
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(e.what());
    }
}

HarmonicMap load_map(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open map file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("map file is not valid JSON: ") + e.what());
    }
    return map_from_json(j);
}

void save_map(const HarmonicMap& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write map file: " + path);
    out << to_json(f).dump(2) << "\n";
}

void save_series(const AnalyticSeries& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write series file: " + path);
    out << to_json(s).dump(2) << "\n";
}

}  // namespace harmdisk
