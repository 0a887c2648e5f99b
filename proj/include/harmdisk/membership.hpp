// Membership certificates for the harmonic class: the coefficient sufficient
// condition, boundary grid sampling of the defining inequality, the
// analytic-slice sweep over unimodular lambda, and the numeric proxies
// (Jacobian positivity, pairwise injectivity).
#pragma once

#include "harmdisk/certificate.hpp"
#include "harmdisk/class_params.hpp"
#include "harmdisk/series.hpp"
#include "harmdisk/sweep.hpp"

namespace harmdisk {

// margin = beta - sum_{n>=2} n(n+alpha-1)(|a_n| + |b_n|). Sufficient, not
// necessary: a map failing here may still pass grid_sup_certificate.
// Requires g'(0) = 0 (class H0); throws std::domain_error otherwise.
Certificate coefficient_margin(const HarmonicMap& f, const ClassParams& p, double tolerance = kDefaultTolerance);

// margin = beta - max over grid points of defect(f, p, z). Both modulus terms
// come from polynomials, so the sup over the disk is attained near the
// largest radius; the certificate records the grid used.
Certificate grid_sup_certificate(const HarmonicMap& f, const ClassParams& p, const GridSpec& grid,
                                 double tolerance = kDefaultTolerance, Exec exec = Exec::parallel);

// margin = beta - max over lambda samples and grid points of
// |z F_lambda'' + alpha (F_lambda' - 1)|, F_lambda = h + lambda g. By
// sup_{|lambda|=1} |A + lambda B| = |A| + |B| this converges to the grid_sup
// defect from below as lambda_count grows.
Certificate lambda_sweep(const HarmonicMap& f, const ClassParams& p, const GridSpec& grid,
                         int lambda_count = kDefaultLambdaCount, double tolerance = kDefaultTolerance,
                         Exec exec = Exec::parallel);

// margin = min over lambda samples and grid points of
// (beta/(1+alpha))|z| - |F_lambda'(z) - 1|. Nonnegative for class members;
// the caller is expected to have certified membership first.
Certificate derivative_bound_check(const HarmonicMap& f, const ClassParams& p, const GridSpec& grid,
                                   int lambda_count = kDefaultLambdaCount, double tolerance = kDefaultTolerance,
                                   Exec exec = Exec::parallel);

// margin = min over grid of J_f; passes only if strictly positive everywhere.
Certificate sense_preserving_certificate(const HarmonicMap& f, const GridSpec& grid, Exec exec = Exec::parallel);

// margin = min over distinct pairs from the coarse sub-grid (radii <= 0.9) of
// |f(z1) - f(z2)| / |z1 - z2|. A falsifier for univalence, not a proof.
Certificate injectivity_scan(const HarmonicMap& f, const GridSpec& grid, Exec exec = Exec::parallel);

}  // namespace harmdisk
