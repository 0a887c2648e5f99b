// The parameter pair (alpha, beta) and the regime thresholds under which
// class members are close-to-convex, convex, or starlike.
#pragma once

#include <optional>

namespace harmdisk {

struct ClassParams {
    double alpha;  // > -1 strictly
    double beta;   // > 0 strictly

    ClassParams(double alpha, double beta);
};

// Members are close-to-convex (hence univalent) for beta in (0, 1+alpha].
double beta_max_close_to_convex(double alpha);

// Five-branch convexity threshold; continuous across all four branch
// boundaries sqrt(5)-2, 1, 2/(sqrt(5)-1), 2.
double beta_max_convex(double alpha);

// The printed alpha != 1 starlikeness branch 2(1+alpha)/(2 + alpha^(2/(1-alpha)))
// does not meet the alpha = 1 value 4e^2/(1+e^2); replacing the leading 2 in
// the denominator by 1 restores continuity. Both readings are computable;
// `continuous` is the default. For alpha <= 0 the exponent has a negative base
// and no real value is fabricated: the threshold is reported as unknown.
enum class StarlikeMode { literal, continuous };

std::optional<double> beta_max_starlike(double alpha, StarlikeMode mode = StarlikeMode::continuous);

struct RegimeReport {
    double alpha = 0.0;
    double beta = 0.0;
    bool close_to_convex = false;
    bool convex = false;
    std::optional<bool> starlike;  // unset when the threshold is unknown
    double beta_max_ctc = 0.0;
    double beta_max_cvx = 0.0;
    std::optional<double> beta_max_star;
    StarlikeMode mode = StarlikeMode::continuous;
};

// Boundary comparisons use absolute tolerance 1e-12; beta exactly at a
// threshold counts as inside.
RegimeReport classify(const ClassParams& p, StarlikeMode mode = StarlikeMode::continuous);

}  // namespace harmdisk
