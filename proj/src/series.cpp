#include "harmdisk/series.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace harmdisk {

namespace {

// Boundary points produced by cos/sin land within an ulp of the unit circle.
constexpr double kDiskSlack = 1e-9;

void require_in_disk(complex_t z) {
    if (std::abs(z) > 1.0 + kDiskSlack) {
        throw std::domain_error("evaluation point lies outside the closed unit disk");
    }
}

}  // namespace

AnalyticSeries::AnalyticSeries(std::vector<complex_t> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::domain_error("AnalyticSeries needs at least one coefficient");
    }
}

AnalyticSeries AnalyticSeries::zero(int degree) {
    if (degree < 0) throw std::domain_error("negative truncation degree");
    return AnalyticSeries(std::vector<complex_t>(static_cast<std::size_t>(degree) + 1, complex_t{0.0, 0.0}));
}

AnalyticSeries AnalyticSeries::identity(int degree) {
    if (degree < 1) throw std::domain_error("identity series needs degree >= 1");
    std::vector<complex_t> c(static_cast<std::size_t>(degree) + 1, complex_t{0.0, 0.0});
    c[1] = complex_t{1.0, 0.0};
    return AnalyticSeries(std::move(c));
}

HarmonicMap::HarmonicMap(AnalyticSeries h, AnalyticSeries g) : h_(std::move(h)), g_(std::move(g)) {
    if (!h_.is_normalized()) {
        throw std::domain_error("analytic part must satisfy h(0) = 0, h'(0) = 1 exactly");
    }
    if (g_.coeff(0) != complex_t{0.0, 0.0}) {
        throw std::domain_error("co-analytic part must satisfy g(0) = 0");
    }
    if (g_.degree() != h_.degree()) {
        throw std::domain_error("h and g must share one truncation degree");
    }
}

GridSpec::GridSpec(std::vector<double> r, int angles) : radii(std::move(r)), angles_per_circle(angles) {
    if (radii.empty()) throw std::domain_error("grid needs at least one radius");
    if (angles_per_circle < 8) throw std::domain_error("grid needs at least 8 angles per circle");
    double prev = 0.0;
    for (const double rad : radii) {
        if (!(rad > prev)) throw std::domain_error("grid radii must be positive and strictly increasing");
        prev = rad;
    }
    if (!(radii.back() < 1.0)) throw std::domain_error("grid radii must stay below 1");
}

complex_t GridSpec::point(std::size_t index) const {
    const std::size_t k = static_cast<std::size_t>(angles_per_circle);
    const double r = radii[index / k];
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(index % k) / static_cast<double>(k);
    return complex_t{r * std::cos(theta), r * std::sin(theta)};
}

GridSpec GridSpec::default_spec() {
    return GridSpec({0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99, 0.999}, 512);
}

GridSpec GridSpec::coarse() const {
    std::vector<double> kept;
    for (const double r : radii) {
        if (r <= 0.9) kept.push_back(r);
    }
    if (kept.empty()) kept.push_back(radii.front());
    return GridSpec(std::move(kept), angles_per_circle);
}

complex_t eval(const AnalyticSeries& s, complex_t z) {
    require_in_disk(z);
    const auto& c = s.coeffs();
    complex_t acc = c.back();
    for (std::size_t n = c.size() - 1; n-- > 0;) {
        acc = acc * z + c[n];
    }
    return acc;
}

AnalyticSeries differentiate(const AnalyticSeries& s, int order) {
    if (order != 1 && order != 2) throw std::domain_error("derivative order must be 1 or 2");
    if (s.degree() < order) throw std::domain_error("series degree too small for requested derivative");
    auto once = [](const AnalyticSeries& in) {
        const auto& c = in.coeffs();
        std::vector<complex_t> out(c.size() - 1);
        for (std::size_t n = 1; n < c.size(); ++n) {
            out[n - 1] = static_cast<double>(n) * c[n];
        }
        return AnalyticSeries(std::move(out));
    };
    AnalyticSeries d = once(s);
    return order == 1 ? d : once(d);
}

AnalyticSeries linear_combination(complex_t a, const AnalyticSeries& s1, complex_t b, const AnalyticSeries& s2) {
    const int degree = std::max(s1.degree(), s2.degree());
    std::vector<complex_t> out(static_cast<std::size_t>(degree) + 1);
    for (int n = 0; n <= degree; ++n) {
        out[static_cast<std::size_t>(n)] = a * s1.coeff(n) + b * s2.coeff(n);
    }
    return AnalyticSeries(std::move(out));
}

AnalyticSeries hadamard(const AnalyticSeries& s1, const AnalyticSeries& s2) {
    const int degree = std::min(s1.degree(), s2.degree());
    std::vector<complex_t> out(static_cast<std::size_t>(degree) + 1);
    for (int n = 0; n <= degree; ++n) {
        out[static_cast<std::size_t>(n)] = s1.coeff(n) * s2.coeff(n);
    }
    return AnalyticSeries(std::move(out));
}

complex_t eval_harmonic(const HarmonicMap& f, complex_t z) {
    return eval(f.h(), z) + std::conj(eval(f.g(), z));
}

AnalyticSeries analytic_slice(const HarmonicMap& f, complex_t lambda) {
    if (std::fabs(std::abs(lambda) - 1.0) > 1e-12) {
        throw std::domain_error("slice parameter lambda must lie on the unit circle");
    }
    return linear_combination(complex_t{1.0, 0.0}, f.h(), lambda, f.g());
}

HarmonicMap convex_combination(const std::vector<HarmonicMap>& fs, const std::vector<double>& ws) {
    if (fs.empty() || fs.size() != ws.size()) {
        throw std::domain_error("convex combination needs one weight per map");
    }
    double total = 0.0;
    for (const double w : ws) {
        if (w < 0.0) throw std::domain_error("convex combination weights must be nonnegative");
        total += w;
    }
    if (std::fabs(total - 1.0) > 1e-12) {
        throw std::domain_error("convex combination weights must sum to 1");
    }
    int degree = 1;
    for (const auto& f : fs) degree = std::max(degree, f.degree());

    std::vector<complex_t> h(static_cast<std::size_t>(degree) + 1, complex_t{0.0, 0.0});
    std::vector<complex_t> g(static_cast<std::size_t>(degree) + 1, complex_t{0.0, 0.0});
    for (std::size_t k = 0; k < fs.size(); ++k) {
        for (int n = 0; n <= degree; ++n) {
            h[static_cast<std::size_t>(n)] += ws[k] * fs[k].h().coeff(n);
            g[static_cast<std::size_t>(n)] += ws[k] * fs[k].g().coeff(n);
        }
    }
    // Every input has h-coefficient 1 at index 1 and the weights sum to one;
    // pin the normalization so the float weight sum cannot smear it.
    h[0] = complex_t{0.0, 0.0};
    h[1] = complex_t{1.0, 0.0};
    g[0] = complex_t{0.0, 0.0};
    return HarmonicMap(AnalyticSeries(std::move(h)), AnalyticSeries(std::move(g)));
}

DefectEvaluator::DefectEvaluator(const HarmonicMap& f, double alpha)
    : hp_(differentiate(f.h(), 1)),
      hpp_(f.degree() >= 2 ? differentiate(f.h(), 2) : AnalyticSeries::zero(0)),
      gp_(differentiate(f.g(), 1)),
      gpp_(f.degree() >= 2 ? differentiate(f.g(), 2) : AnalyticSeries::zero(0)),
      alpha_(alpha) {}

complex_t DefectEvaluator::analytic_term(complex_t z) const {
    return z * eval(hpp_, z) + alpha_ * (eval(hp_, z) - complex_t{1.0, 0.0});
}

complex_t DefectEvaluator::coanalytic_term(complex_t z) const {
    return z * eval(gpp_, z) + alpha_ * eval(gp_, z);
}

complex_t DefectEvaluator::dh_minus_one(complex_t z) const { return eval(hp_, z) - complex_t{1.0, 0.0}; }

complex_t DefectEvaluator::dg(complex_t z) const { return eval(gp_, z); }

double DefectEvaluator::jacobian(complex_t z) const { return std::norm(eval(hp_, z)) - std::norm(eval(gp_, z)); }

double defect(const HarmonicMap& f, const ClassParams& p, complex_t z) {
    require_in_disk(z);
    return DefectEvaluator(f, p.alpha)(z);
}

double jacobian(const HarmonicMap& f, complex_t z) {
    require_in_disk(z);
    return DefectEvaluator(f, 0.0).jacobian(z);
}

}  // namespace harmdisk
