#include "harmdisk/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace harmdisk {

double coeff_bound(int n, const ClassParams& p) {
    if (n < 2) throw std::domain_error("coefficient bounds start at n = 2");
    return p.beta / (n * (n + p.alpha - 1.0));
}

GrowthEnvelope growth_envelope(double r, const ClassParams& p) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("radius must lie in [0, 1)");
    if (p.beta > 1.0 + p.alpha) {
        throw std::domain_error("growth envelope requires beta <= 1 + alpha");
    }
    const double half = p.beta / (2.0 * (1.0 + p.alpha));
    GrowthEnvelope env;
    env.r = r;
    // r(1 -/+ half*r) matches the rounding of Horner evaluation of the
    // extremal z + half*z^2, so attainment at the extremal is exact.
    env.lower = r * (1.0 - half * r);
    env.upper = r * (1.0 + half * r);
    return env;
}

HarmonicMap make_extremal(ExtremalKind kind, int n, const ClassParams& p) {
    const bool coeff_kind = kind == ExtremalKind::coeff_analytic || kind == ExtremalKind::coeff_coanalytic;
    if (coeff_kind && n < 2) throw std::domain_error("coefficient extremals need n >= 2");
    const int degree = coeff_kind ? n : 2;
    std::vector<complex_t> h(static_cast<std::size_t>(degree) + 1, complex_t{0.0, 0.0});
    std::vector<complex_t> g(static_cast<std::size_t>(degree) + 1, complex_t{0.0, 0.0});
    h[1] = complex_t{1.0, 0.0};
    switch (kind) {
        case ExtremalKind::coeff_analytic:
            h[static_cast<std::size_t>(n)] = coeff_bound(n, p);
            break;
        case ExtremalKind::coeff_coanalytic:
            g[static_cast<std::size_t>(n)] = coeff_bound(n, p);
            break;
        case ExtremalKind::growth_analytic:
            h[2] = coeff_bound(2, p);
            break;
        case ExtremalKind::growth_coanalytic:
            g[2] = coeff_bound(2, p);
            break;
        case ExtremalKind::theta: {
            const double quarter = p.beta / (4.0 * (1.0 + p.alpha));
            h[2] = complex_t{quarter, 0.0};
            g[2] = complex_t{-quarter, 0.0};
            break;
        }
    }
    return HarmonicMap(AnalyticSeries(std::move(h)), AnalyticSeries(std::move(g)));
}

Certificate lipschitz_scan(const HarmonicMap& f, const GridSpec& grid, Exec exec) {
    const GridSpec sub = grid.coarse();
    const std::size_t count = sub.point_count();
    std::vector<complex_t> w(count);
    for (std::size_t i = 0; i < count; ++i) {
        w[i] = eval_harmonic(f, sub.point(i));
    }
    const double worst = min_over(
        count,
        [&](std::size_t i) {
            const complex_t zi = sub.point(i);
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t j = i + 1; j < count; ++j) {
                const double dz = std::abs(zi - sub.point(j));
                if (dz == 0.0) continue;
                best = std::min(best, 2.0 * dz - std::abs(w[i] - w[j]));
            }
            return best;
        },
        exec);
    Certificate c = make_certificate(CheckMethod::lipschitz_scan, worst, kDefaultTolerance);
    c.grid = sub;
    c.truncation_degree = f.degree();
    return c;
}

double boundary_length(const HarmonicMap& f, int samples, Exec exec) {
    if (samples < 64) throw std::domain_error("boundary length needs at least 64 samples");
    const std::size_t n = static_cast<std::size_t>(samples);
    std::vector<complex_t> w(n + 1);
#ifdef _OPENMP
    if (exec == Exec::parallel) {
        const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
        for (long long k = 0; k <= nn; ++k) {
            const double theta =
                2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
            w[static_cast<std::size_t>(k)] = eval_harmonic(f, complex_t{std::cos(theta), std::sin(theta)});
        }
    } else
#else
    (void)exec;
#endif
    {
        for (std::size_t k = 0; k <= n; ++k) {
            const double theta =
                2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
            w[k] = eval_harmonic(f, complex_t{std::cos(theta), std::sin(theta)});
        }
    }
    double length = 0.0;  // fixed ascending order keeps the sum schedule-independent
    for (std::size_t k = 0; k < n; ++k) {
        length += std::abs(w[k + 1] - w[k]);
    }
    return length;
}

}  // namespace harmdisk
