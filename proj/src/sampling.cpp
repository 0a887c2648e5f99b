#include "harmdisk/sampling.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace harmdisk {

ClassParams sample_params(rng_t& rng) {
    std::uniform_real_distribution<double> alpha_dist(-0.9, 4.0);
    std::uniform_real_distribution<double> fraction(0.05, 1.0);
    const double alpha = alpha_dist(rng);
    return ClassParams(alpha, fraction(rng) * (1.0 + alpha));
}

HarmonicMap sample_member(rng_t& rng, const ClassParams& p, int max_degree) {
    std::uniform_int_distribution<int> degree_dist(2, max_degree);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

    const int degree = degree_dist(rng);
    std::vector<double> magnitudes(static_cast<std::size_t>(degree) + 1, 0.0);
    double weighted = 0.0;
    for (int n = 2; n <= degree; ++n) {
        const double m = unit(rng);
        magnitudes[static_cast<std::size_t>(n)] = m;
        weighted += n * (n + p.alpha - 1.0) * m;
    }
    const double budget = unit(rng) * p.beta;  // total weighted mass to spend
    const double scale = weighted > 0.0 ? budget / weighted : 0.0;

    std::vector<complex_t> h(static_cast<std::size_t>(degree) + 1, complex_t{0.0, 0.0});
    std::vector<complex_t> g(static_cast<std::size_t>(degree) + 1, complex_t{0.0, 0.0});
    h[1] = complex_t{1.0, 0.0};
    for (int n = 2; n <= degree; ++n) {
        const double total = scale * magnitudes[static_cast<std::size_t>(n)];
        const double split = unit(rng);
        const double pa = angle(rng);
        const double pb = angle(rng);
        h[static_cast<std::size_t>(n)] = std::polar(split * total, pa);
        g[static_cast<std::size_t>(n)] = std::polar((1.0 - split) * total, pb);
    }
    return HarmonicMap(AnalyticSeries(std::move(h)), AnalyticSeries(std::move(g)));
}

}  // namespace harmdisk
