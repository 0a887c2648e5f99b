#include "harmdisk/membership.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace harmdisk {

namespace {

std::string method_name(CheckMethod m) {
    switch (m) {
        case CheckMethod::coefficient_sum: return "coefficient_sum";
        case CheckMethod::grid_sup: return "grid_sup";
        case CheckMethod::lambda_sweep: return "lambda_sweep";
        case CheckMethod::derivative_bound: return "derivative_bound";
        case CheckMethod::sense_preserving: return "sense_preserving";
        case CheckMethod::injectivity_scan: return "injectivity_scan";
        case CheckMethod::lipschitz_scan: return "lipschitz_scan";
        case CheckMethod::herglotz: return "herglotz";
    }
    return "unknown";
}

std::vector<complex_t> unit_roots(int count) {
    std::vector<complex_t> lambdas(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
        lambdas[static_cast<std::size_t>(k)] = complex_t{std::cos(theta), std::sin(theta)};
    }
    return lambdas;
}

// Points f(z_i) of the coarse sub-grid, evaluated in index order (parallel
// when asked; the values are independent per index).
std::vector<complex_t> map_images(const HarmonicMap& f, const GridSpec& grid, Exec exec) {
    const std::size_t count = grid.point_count();
    std::vector<complex_t> w(count);
#ifdef _OPENMP
    if (exec == Exec::parallel) {
        const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < n; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            w[idx] = eval_harmonic(f, grid.point(idx));
        }
        return w;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < count; ++i) {
        w[i] = eval_harmonic(f, grid.point(i));
    }
    return w;
}

}  // namespace

std::string to_string(CheckMethod m) { return method_name(m); }

Certificate coefficient_margin(const HarmonicMap& f, const ClassParams& p, double tolerance) {
    if (!f.is_h0()) {
        throw std::domain_error("coefficient condition applies to maps with g'(0) = 0");
    }
    double sum = 0.0;
    for (int n = 2; n <= f.degree(); ++n) {
        const double weight = n * (n + p.alpha - 1.0);
        sum += weight * (std::abs(f.h().coeff(n)) + std::abs(f.g().coeff(n)));
    }
    Certificate c = make_certificate(CheckMethod::coefficient_sum, p.beta - sum, tolerance);
    c.truncation_degree = f.degree();
    return c;
}

Certificate grid_sup_certificate(const HarmonicMap& f, const ClassParams& p, const GridSpec& grid,
                                 double tolerance, Exec exec) {
    const DefectEvaluator d(f, p.alpha);
    const double worst = max_over(
        grid.point_count(), [&](std::size_t i) { return d(grid.point(i)); }, exec);
    Certificate c = make_certificate(CheckMethod::grid_sup, p.beta - worst, tolerance);
    c.grid = grid;
    c.truncation_degree = f.degree();
    return c;
}

Certificate lambda_sweep(const HarmonicMap& f, const ClassParams& p, const GridSpec& grid, int lambda_count,
                         double tolerance, Exec exec) {
    if (lambda_count < 8) throw std::domain_error("lambda sweep needs at least 8 samples");
    const DefectEvaluator d(f, p.alpha);
    const std::vector<complex_t> lambdas = unit_roots(lambda_count);
    // z F_lambda'' + alpha (F_lambda' - 1) = A(z) + lambda B(z), so the series
    // get evaluated once per grid point and only the lambda rotation varies.
    const double worst = max_over(
        grid.point_count(),
        [&](std::size_t i) {
            const complex_t z = grid.point(i);
            const complex_t a = d.analytic_term(z);
            const complex_t b = d.coanalytic_term(z);
            double best = 0.0;
            for (const complex_t lambda : lambdas) {
                best = std::max(best, std::abs(a + lambda * b));
            }
            return best;
        },
        exec);
    Certificate c = make_certificate(CheckMethod::lambda_sweep, p.beta - worst, tolerance);
    c.grid = grid;
    c.lambda_count = lambda_count;
    return c;
}

Certificate derivative_bound_check(const HarmonicMap& f, const ClassParams& p, const GridSpec& grid,
                                   int lambda_count, double tolerance, Exec exec) {
    if (lambda_count < 8) throw std::domain_error("lambda sweep needs at least 8 samples");
    const DefectEvaluator d(f, p.alpha);
    const std::vector<complex_t> lambdas = unit_roots(lambda_count);
    const double rate = p.beta / (1.0 + p.alpha);
    const double worst = min_over(
        grid.point_count(),
        [&](std::size_t i) {
            const complex_t z = grid.point(i);
            const complex_t u = d.dh_minus_one(z);
            const complex_t v = d.dg(z);
            double deviation = 0.0;
            for (const complex_t lambda : lambdas) {
                deviation = std::max(deviation, std::abs(u + lambda * v));
            }
            return rate * std::abs(z) - deviation;
        },
        exec);
    Certificate c = make_certificate(CheckMethod::derivative_bound, worst, tolerance);
    c.grid = grid;
    c.lambda_count = lambda_count;
    return c;
}

Certificate sense_preserving_certificate(const HarmonicMap& f, const GridSpec& grid, Exec exec) {
    const DefectEvaluator d(f, 0.0);
    const double worst = min_over(
        grid.point_count(), [&](std::size_t i) { return d.jacobian(grid.point(i)); }, exec);
    Certificate c = make_certificate(CheckMethod::sense_preserving, worst, 0.0);
    c.grid = grid;
    return c;
}

Certificate injectivity_scan(const HarmonicMap& f, const GridSpec& grid, Exec exec) {
    const GridSpec sub = grid.coarse();
    const std::vector<complex_t> w = map_images(f, sub, exec);
    const std::size_t count = sub.point_count();
    // Pairwise min of |f(z_i) - f(z_j)| / |z_i - z_j|, reduced row by row.
    const double worst = min_over(
        count,
        [&](std::size_t i) {
            const complex_t zi = sub.point(i);
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t j = i + 1; j < count; ++j) {
                const double dz = std::abs(zi - sub.point(j));
                if (dz == 0.0) continue;
                best = std::min(best, std::abs(w[i] - w[j]) / dz);
            }
            return best;
        },
        exec);
    Certificate c = make_certificate(CheckMethod::injectivity_scan, worst, 0.0);
    c.passed = worst > 0.0;  // falsifier: any collapse of distinct points fails
    c.grid = sub;
    return c;
}

}  // namespace harmdisk
