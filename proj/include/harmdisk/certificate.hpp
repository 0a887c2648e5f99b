#pragma once

#include <optional>
#include <string>

#include "harmdisk/series.hpp"

namespace harmdisk {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr int kDefaultLambdaCount = 256;

enum class CheckMethod {
    coefficient_sum,
    grid_sup,
    lambda_sweep,
    derivative_bound,
    sense_preserving,
    injectivity_scan,
    lipschitz_scan,
    herglotz,
};

std::string to_string(CheckMethod m);

// Outcome of a numeric check. margin is "budget minus attained value":
// positive means pass with room to spare. passed = (margin >= -tolerance),
// except sense_preserving which demands strictly positive margin (a map with
// |g'| = |h'| is degenerate, not borderline).
struct Certificate {
    CheckMethod method = CheckMethod::grid_sup;
    double margin = 0.0;
    double tolerance = kDefaultTolerance;
    bool passed = false;
    std::optional<GridSpec> grid;
    std::optional<int> lambda_count;
    std::optional<int> truncation_degree;
};

inline Certificate make_certificate(CheckMethod method, double margin, double tolerance) {
    Certificate c;
    c.method = method;
    c.margin = margin;
    c.tolerance = tolerance;
    c.passed = method == CheckMethod::sense_preserving ? (margin > 0.0) : (margin >= -tolerance);
    return c;
}

}  // namespace harmdisk
