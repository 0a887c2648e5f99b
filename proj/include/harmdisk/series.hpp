// Truncated complex power series and the harmonic-map data model.
//
// An AnalyticSeries stores coefficients c_0..c_N of a polynomial (a power
// series truncated at degree N). A HarmonicMap is a pair (h, g) representing
// f = h + conj(g) on the closed unit disk, normalized so that h(0) = 0 and
// h'(0) = 1. Everything here is an immutable value; all operations are pure
// functions and safe to call from any number of threads.
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "harmdisk/class_params.hpp"

namespace harmdisk {

using complex_t = std::complex<double>;

class AnalyticSeries {
public:
    // coeffs[n] is the coefficient of z^n; must be nonempty.
    explicit AnalyticSeries(std::vector<complex_t> coeffs);

    static AnalyticSeries zero(int degree);
    static AnalyticSeries identity(int degree);  // the series z

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<complex_t>& coeffs() const { return coeffs_; }

    // Coefficient of z^n; zero beyond the truncation degree.
    complex_t coeff(int n) const {
        return (n >= 0 && n < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(n)]
                                                                : complex_t{0.0, 0.0};
    }

    bool is_normalized() const {  // c_0 = 0, c_1 = 1 exactly
        return coeffs_.size() >= 2 && coeffs_[0] == complex_t{0.0, 0.0} && coeffs_[1] == complex_t{1.0, 0.0};
    }

private:
    std::vector<complex_t> coeffs_;
};

// f = h + conj(g). h must be normalized (c_0 = 0, c_1 = 1 exactly), g must
// vanish at the origin, and both parts share one truncation degree. g'(0) may
// be nonzero (class H); is_h0() tells whether g'(0) = 0 as well.
class HarmonicMap {
public:
    HarmonicMap(AnalyticSeries h, AnalyticSeries g);

    const AnalyticSeries& h() const { return h_; }
    const AnalyticSeries& g() const { return g_; }
    int degree() const { return h_.degree(); }
    bool is_h0() const { return g_.coeff(1) == complex_t{0.0, 0.0}; }

private:
    AnalyticSeries h_;
    AnalyticSeries g_;
};

// Radial/angular sampling plan of the unit disk shared by all sweep checks.
struct GridSpec {
    std::vector<double> radii;   // strictly increasing, all in (0, 1)
    int angles_per_circle = 8;

    GridSpec(std::vector<double> radii, int angles_per_circle);

    std::size_t point_count() const { return radii.size() * static_cast<std::size_t>(angles_per_circle); }
    complex_t point(std::size_t index) const;
    double max_radius() const { return radii.back(); }

    // Radii {0.1,...,0.9, 0.99, 0.999} with 512 angles per circle. The defect
    // terms are moduli of polynomials, maximized near the boundary; 0.999
    // pins the sup within O(N * 0.001) of its limit for degree-N tails.
    static GridSpec default_spec();
    // Sub-grid with radii <= 0.9, used where truncated series stop being a
    // faithful proxy near the boundary (pairwise scans, Herglotz gate).
    GridSpec coarse() const;
};

// --- series operations ------------------------------------------------------

// Horner evaluation of sum c_n z^n. Requires |z| <= 1 (tiny slack for
// boundary points produced by cos/sin); throws std::domain_error outside.
complex_t eval(const AnalyticSeries& s, complex_t z);

// Term-wise derivative of order 1 or 2; the result has degree N - order.
AnalyticSeries differentiate(const AnalyticSeries& s, int order);

// a*s1 + b*s2, zero-padding the shorter series.
AnalyticSeries linear_combination(complex_t a, const AnalyticSeries& s1, complex_t b, const AnalyticSeries& s2);

// Term-wise coefficient product; truncates to the smaller degree (product
// coefficients beyond it are unknown).
AnalyticSeries hadamard(const AnalyticSeries& s1, const AnalyticSeries& s2);

// --- harmonic-map operations ------------------------------------------------

// h(z) + conj(g(z)); same domain restriction as eval.
complex_t eval_harmonic(const HarmonicMap& f, complex_t z);

// |z h''(z) + alpha (h'(z) - 1)| + |z g''(z) + alpha g'(z)|: the left side of
// the class inequality moved to one side. f is a member iff this stays <= beta.
double defect(const HarmonicMap& f, const ClassParams& p, complex_t z);

// J_f(z) = |h'(z)|^2 - |g'(z)|^2.
double jacobian(const HarmonicMap& f, complex_t z);

// The analytic slice F_lambda = h + lambda g; lambda must be unimodular
// within 1e-12.
AnalyticSeries analytic_slice(const HarmonicMap& f, complex_t lambda);

// Coefficient-wise weighted sum of h-parts and g-parts. Weights must be
// nonnegative and sum to 1 within 1e-12. Mixed truncation degrees are
// zero-padded to the largest. The output coefficient at index 1 of the h-part
// is pinned to exactly 1 (the weights sum to one, and an inexact float sum
// would break the exact normalization invariant).
HarmonicMap convex_combination(const std::vector<HarmonicMap>& fs, const std::vector<double>& ws);

// Precomputed derivative data for repeated defect/jacobian evaluation on a
// grid. defect()/jacobian() above delegate here, so sweep kernels and the
// one-shot API produce bit-identical values.
class DefectEvaluator {
public:
    DefectEvaluator(const HarmonicMap& f, double alpha);

    // A(z) = z h'' + alpha (h' - 1), B(z) = z g'' + alpha g'.
    complex_t analytic_term(complex_t z) const;
    complex_t coanalytic_term(complex_t z) const;
    double operator()(complex_t z) const { return std::abs(analytic_term(z)) + std::abs(coanalytic_term(z)); }

    // h'(z) - 1 and g'(z), for slice-derivative sweeps.
    complex_t dh_minus_one(complex_t z) const;
    complex_t dg(complex_t z) const;
    double jacobian(complex_t z) const;

private:
    AnalyticSeries hp_, hpp_, gp_, gpp_;
    double alpha_;
};

}  // namespace harmdisk
