// Sharp coefficient and growth bounds, their extremal witnesses, and the
// Lipschitz / boundary-length consequences for class members.
#pragma once

#include "harmdisk/certificate.hpp"
#include "harmdisk/class_params.hpp"
#include "harmdisk/series.hpp"
#include "harmdisk/sweep.hpp"

namespace harmdisk {

// |a_n|, |b_n| <= beta / (n (n + alpha - 1)) for members, n >= 2.
double coeff_bound(int n, const ClassParams& p);

// r -/+ (beta/(2(1+alpha))) r^2. Valid for members when beta <= 1+alpha.
struct GrowthEnvelope {
    double r = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

GrowthEnvelope growth_envelope(double r, const ClassParams& p);

enum class ExtremalKind {
    coeff_analytic,    // z + (beta/(n(n+alpha-1))) z^n
    coeff_coanalytic,  // same coefficient on the co-analytic part
    growth_analytic,   // z + (beta/(2(1+alpha))) z^2
    growth_coanalytic,
    theta,  // z + (beta/(4(1+alpha)))(z^2 - conj(z)^2); coefficient sum equals beta exactly
};

// n is used by the coeff kinds (n >= 2); growth kinds and theta fix n = 2.
HarmonicMap make_extremal(ExtremalKind kind, int n, const ClassParams& p);

// margin = min over sampled coarse-grid pairs of 2|z1 - z2| - |f(z1) - f(z2)|.
// Members with beta <= 1+alpha satisfy the 2-Lipschitz bound.
Certificate lipschitz_scan(const HarmonicMap& f, const GridSpec& grid, Exec exec = Exec::parallel);

// Polygonal length of theta -> f(e^{i theta}) over a uniform partition.
// Evaluation on |z| = 1 is exact for the stored polynomials. samples >= 64.
double boundary_length(const HarmonicMap& f, int samples = 4096, Exec exec = Exec::parallel);

}  // namespace harmdisk
