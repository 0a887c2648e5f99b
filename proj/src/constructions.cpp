#include "harmdisk/constructions.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace harmdisk {

namespace {

// Hypergeometric weights w_k = (a)_k (b)_k / ((c)_k k!), k = 0..count-1.
// Terminating parameter sets are computed by direct Pochhammer products so
// small-integer cases stay exact; the recursive ratio is used otherwise to
// keep intermediates in range.
std::vector<double> hypergeometric_weights(const HypergeometricParams& p, int count) {
    std::vector<double> w(static_cast<std::size_t>(count), 0.0);
    if (count == 0) return w;
    if (p.terminating()) {
        const int m = p.termination_degree();
        double factorial = 1.0;
        for (int k = 0; k < count; ++k) {
            if (k > 0) factorial *= static_cast<double>(k);
            if (k > m) break;  // later terms are exactly zero
            w[static_cast<std::size_t>(k)] =
                pochhammer(p.a, k) * pochhammer(p.b, k) / (pochhammer(p.c, k) * factorial);
        }
        return w;
    }
    double term = 1.0;
    for (int k = 0; k < count; ++k) {
        w[static_cast<std::size_t>(k)] = term;
        const double dk = static_cast<double>(k);
        term *= (p.a + dk) * (p.b + dk) / ((p.c + dk) * (dk + 1.0));
    }
    return w;
}

HarmonicMap assemble(ConstructionKind kind, const std::vector<double>& w) {
    const int count = static_cast<int>(w.size());
    const bool f2_shape = kind == ConstructionKind::hyper_f2 || kind == ConstructionKind::poly_F2;
    const bool f3_shape = kind == ConstructionKind::hyper_f3 || kind == ConstructionKind::poly_F3;
    const int degree = std::max(2, f2_shape ? count : count + 1);

    std::vector<complex_t> h(static_cast<std::size_t>(degree) + 1, complex_t{0.0, 0.0});
    std::vector<complex_t> g(static_cast<std::size_t>(degree) + 1, complex_t{0.0, 0.0});
    h[1] = complex_t{1.0, 0.0};
    for (int k = 0; k < count; ++k) {
        const double wk = w[static_cast<std::size_t>(k)];
        if (f2_shape) {
            if (k >= 1) g[static_cast<std::size_t>(k + 1)] = wk;  // z(F - 1) drops the constant term
        } else if (f3_shape) {
            g[static_cast<std::size_t>(k + 2)] = wk / (static_cast<double>(k) + 1.0);
        } else {
            g[static_cast<std::size_t>(k + 2)] = wk;  // z^2 F
        }
    }
    return HarmonicMap(AnalyticSeries(std::move(h)), AnalyticSeries(std::move(g)));
}

int weight_count(ConstructionKind kind, const HypergeometricParams& p, int truncation) {
    if (p.terminating()) return p.termination_degree() + 1;
    if (truncation < 2) throw std::domain_error("truncation degree must be at least 2");
    const bool f2_shape = kind == ConstructionKind::hyper_f2 || kind == ConstructionKind::poly_F2;
    return f2_shape ? truncation : std::max(1, truncation - 1);
}

double condition_lhs(ConditionKind kind, const HypergeometricParams& p, const ClassParams& cp, double lambda) {
    const double a = p.a, b = p.b, c = p.c, alpha = cp.alpha;
    const double s = c - a - b;
    switch (kind) {
        case ConditionKind::a:
            return pochhammer(a, 2) * pochhammer(b, 2) / pochhammer(s - 2.0, 2) +
                   a * b * (alpha + 4.0) / (s - 1.0) + 2.0 * (1.0 + alpha);
        case ConditionKind::b:
            return a * b * (a * b + c - 1.0) / pochhammer(s - 2.0, 2) + a * b * (1.0 + alpha) / (s - 1.0) +
                   alpha;
        case ConditionKind::c:
            // The coefficient sum for the integrated map, assembled from the
            // validated closed sums; this is the route the crosscheck tests.
            return lemma_sum_closed(LemmaBranch::a, p) + (1.0 + alpha) * lambda +
                   alpha * lemma_sum_closed(LemmaBranch::c, p);
    }
    throw std::domain_error("unknown condition kind");
}

}  // namespace

HarmonicMap build_hypergeometric(ConstructionKind kind, const HypergeometricParams& p, int truncation) {
    if (kind == ConstructionKind::poly_F1 || kind == ConstructionKind::poly_F2 ||
        kind == ConstructionKind::poly_F3) {
        throw std::domain_error("polynomial kinds take (m, c); use build_polynomial");
    }
    return assemble(kind, hypergeometric_weights(p, weight_count(kind, p, truncation)));
}

HarmonicMap build_polynomial(ConstructionKind kind, int m, double c) {
    if (kind == ConstructionKind::hyper_f1 || kind == ConstructionKind::hyper_f2 ||
        kind == ConstructionKind::hyper_f3) {
        throw std::domain_error("hypergeometric kinds take (a, b, c); use build_hypergeometric");
    }
    if (m < 1) throw std::domain_error("polynomial order m must be positive");
    if (!(c > 0.0)) throw std::domain_error("polynomial family needs c > 0");
    // Binomial form of the a = b = -m weights: C(m,k) (m-k+1)_k / (c)_k.
    std::vector<double> w(static_cast<std::size_t>(m) + 1, 0.0);
    for (int k = 0; k <= m; ++k) {
        const double binom = pochhammer(static_cast<double>(m - k + 1), k) / pochhammer(1.0, k);
        w[static_cast<std::size_t>(k)] =
            binom * pochhammer(static_cast<double>(m - k + 1), k) / pochhammer(c, k);
    }
    ConstructionKind shape = kind == ConstructionKind::poly_F1   ? ConstructionKind::hyper_f1
                             : kind == ConstructionKind::poly_F2 ? ConstructionKind::hyper_f2
                                                                 : ConstructionKind::hyper_f3;
    return assemble(shape, w);
}

HarmonicMap build(const ConstructionSpec& spec) {
    switch (spec.kind) {
        case ConstructionKind::hyper_f1:
        case ConstructionKind::hyper_f2:
        case ConstructionKind::hyper_f3:
            return build_hypergeometric(spec.kind, HypergeometricParams(spec.a, spec.b, spec.c),
                                        spec.truncation);
        case ConstructionKind::poly_F1:
        case ConstructionKind::poly_F2:
        case ConstructionKind::poly_F3:
            return build_polynomial(spec.kind, spec.m, spec.c);
    }
    throw std::domain_error("unknown construction kind");
}

ConditionReport condition_margin(ConditionKind kind, const HypergeometricParams& p, const ClassParams& cp) {
    const double s = p.c - p.a - p.b;
    if (kind == ConditionKind::a || kind == ConditionKind::b) {
        if (!(s > 2.0)) throw std::domain_error("condition kinds (a) and (b) require c > a + b + 2");
    } else {
        if (p.a == 1.0 || p.b == 1.0 || p.c == 1.0 || !(p.c > std::max(0.0, p.a + p.b + 1.0))) {
            throw std::domain_error("condition kind (c) requires a, b, c != 1 and c > max(0, a+b+1)");
        }
    }
    if (kind == ConditionKind::b && !(cp.beta > cp.alpha)) {
        throw std::domain_error("condition kind (b) requires beta > alpha");
    }

    ConditionReport report;
    report.kind = kind;
    report.gauss_value = gauss_value(p);
    const double lhs = condition_lhs(kind, p, cp, report.gauss_value);
    switch (kind) {
        case ConditionKind::a: report.margin = cp.beta / report.gauss_value - lhs; break;
        case ConditionKind::b: report.margin = (cp.beta - cp.alpha) / report.gauss_value - lhs; break;
        case ConditionKind::c: report.margin = cp.beta - lhs; break;
    }

    // Ground-truth crosscheck: direct coefficient summation of the built map,
    // extended until the term falls below 1e-14 * beta or degree 512.
    const int offset = kind == ConditionKind::b ? 1 : 2;  // coefficient index n carries weight w_{n-offset}
    const int max_weights = p.terminating() ? p.termination_degree() + 1 : kMaxConditionDegree;
    double sum = 0.0;
    double last_term = 0.0;
    double weight = 1.0;
    int n_last = offset;
    for (int k = 0; k < max_weights; ++k) {
        const int n = k + offset;
        if (kind == ConditionKind::b && k == 0) {
            weight *= (p.a + 0.0) * (p.b + 0.0) / (p.c * 1.0);
            continue;  // the constant term of F is dropped by F - 1
        }
        double coeff = std::fabs(weight);
        if (kind == ConditionKind::c) coeff /= static_cast<double>(n - 1);
        last_term = n * (n + cp.alpha - 1.0) * coeff;
        sum += last_term;
        n_last = n;
        if (!p.terminating() && last_term < 1e-14 * cp.beta) break;
        const double dk = static_cast<double>(k);
        weight *= (p.a + dk) * (p.b + dk) / ((p.c + dk) * (dk + 1.0));
    }
    report.coefficient_margin_crosscheck = cp.beta - sum;
    report.truncation_degree = n_last;
    if (!p.terminating() && n_last - offset + 1 >= kMaxConditionDegree) {
        // Terms decay like n^(1-s) (n^-s for kind c); integral estimate.
        const double decay = kind == ConditionKind::c ? s - 1.0 : s - 2.0;
        report.tail_bound = last_term * static_cast<double>(n_last) / std::max(decay, 0.05);
    }
    return report;
}

HarmonicMap convolution_transform(const HarmonicMap& f, const AnalyticSeries& phi, complex_t lambda) {
    if (std::fabs(std::abs(lambda) - 1.0) > 1e-12) {
        throw std::domain_error("convolution rotation lambda must lie on the unit circle");
    }
    if (phi.coeff(0) != complex_t{0.0, 0.0} || phi.coeff(1) != complex_t{1.0, 0.0}) {
        throw std::domain_error("convolution factor must satisfy phi(0) = 0, phi'(0) = 1");
    }
    const AnalyticSeries h = hadamard(f.h(), phi);
    AnalyticSeries g = hadamard(f.g(), phi);
    std::vector<complex_t> scaled = g.coeffs();
    const complex_t rot = std::conj(lambda);
    for (auto& coeff : scaled) coeff *= rot;
    return HarmonicMap(h, AnalyticSeries(std::move(scaled)));
}

Certificate herglotz_check(const AnalyticSeries& phi, const GridSpec& grid, Exec exec) {
    if (phi.coeff(0) != complex_t{0.0, 0.0} || phi.coeff(1) != complex_t{1.0, 0.0}) {
        throw std::domain_error("herglotz check requires phi(0) = 0, phi'(0) = 1");
    }
    // phi(z)/z as a series: shift the coefficients down one power.
    std::vector<complex_t> shifted(phi.coeffs().begin() + 1, phi.coeffs().end());
    const AnalyticSeries quotient{std::move(shifted)};
    const double worst = min_over(
        grid.point_count(), [&](std::size_t i) { return eval(quotient, grid.point(i)).real() - 0.5; }, exec);
    Certificate c = make_certificate(CheckMethod::herglotz, worst, kDefaultTolerance);
    c.grid = grid;
    c.truncation_degree = phi.degree();
    return c;
}

AnalyticSeries convex_catalog(ConvexCatalog name, int N) {
    if (N < 2) throw std::domain_error("catalog series need degree >= 2");
    std::vector<complex_t> coeffs(static_cast<std::size_t>(N) + 1, complex_t{0.0, 0.0});
    for (int n = 1; n <= N; ++n) {
        coeffs[static_cast<std::size_t>(n)] =
            name == ConvexCatalog::half_plane ? complex_t{1.0, 0.0} : complex_t{1.0 / n, 0.0};
    }
    return AnalyticSeries(std::move(coeffs));
}

}  // namespace harmdisk
