#include "harmdisk/class_params.hpp"

#include <cmath>
#include <stdexcept>

namespace harmdisk {

namespace {
constexpr double kBoundaryTol = 1e-12;  // beta exactly at a threshold counts as inside
}

ClassParams::ClassParams(double a, double b) : alpha(a), beta(b) {
    if (!(alpha > -1.0)) throw std::domain_error("class parameter alpha must exceed -1");
    if (!(beta > 0.0)) throw std::domain_error("class parameter beta must be positive");
}

double beta_max_close_to_convex(double alpha) {
    if (!(alpha > -1.0)) throw std::domain_error("alpha must exceed -1");
    return 1.0 + alpha;
}

double beta_max_convex(double alpha) {
    if (!(alpha > -1.0)) throw std::domain_error("alpha must exceed -1");
    const double s5 = std::sqrt(5.0);
    // The five denominators 2+a, sqrt5, a*sqrt5, 2+a, 2a cross exactly at the
    // branch boundaries, so the threshold is continuous.
    if (alpha <= s5 - 2.0) return (1.0 + alpha) / (2.0 + alpha);
    if (alpha <= 1.0) return (1.0 + alpha) / s5;
    if (alpha <= 2.0 / (s5 - 1.0)) return (1.0 + alpha) / (alpha * s5);
    if (alpha <= 2.0) return (1.0 + alpha) / (2.0 + alpha);
    return (1.0 + alpha) / (2.0 * alpha);
}

std::optional<double> beta_max_starlike(double alpha, StarlikeMode mode) {
    if (!(alpha > -1.0)) throw std::domain_error("alpha must exceed -1");
    if (alpha <= 0.0) return std::nullopt;  // alpha^(2/(1-alpha)) has no real branch to report
    if (alpha == 1.0) {
        const double e2 = std::exp(2.0);
        return 4.0 * e2 / (1.0 + e2);
    }
    const double t = std::pow(alpha, 2.0 / (1.0 - alpha));
    const double denom = (mode == StarlikeMode::literal) ? 2.0 + t : 1.0 + t;
    return 2.0 * (1.0 + alpha) / denom;
}

RegimeReport classify(const ClassParams& p, StarlikeMode mode) {
    RegimeReport rep;
    rep.alpha = p.alpha;
    rep.beta = p.beta;
    rep.mode = mode;
    rep.beta_max_ctc = beta_max_close_to_convex(p.alpha);
    rep.beta_max_cvx = beta_max_convex(p.alpha);
    rep.beta_max_star = beta_max_starlike(p.alpha, mode);
    rep.close_to_convex = p.beta <= rep.beta_max_ctc + kBoundaryTol;
    rep.convex = p.beta <= rep.beta_max_cvx + kBoundaryTol;
    if (rep.beta_max_star) {
        rep.starlike = p.beta <= *rep.beta_max_star + kBoundaryTol;
    }
    return rep;
}

}  // namespace harmdisk
