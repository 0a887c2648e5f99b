// Deterministic random generators for the property suites: class parameters
// and maps built to satisfy the coefficient sufficient condition, so that
// member-only properties can be exercised in bulk.
#pragma once

#include <random>

#include "harmdisk/class_params.hpp"
#include "harmdisk/series.hpp"

namespace harmdisk {

using rng_t = std::mt19937_64;

// alpha in (-0.9, 4], beta = u (1 + alpha) with u in (0, 1]: always inside the
// close-to-convexity range.
ClassParams sample_params(rng_t& rng);

// Draw a degree in [2, max_degree], nonnegative magnitudes scaled so the
// weighted sum n(n+alpha-1)(|a_n|+|b_n|) lands on a uniform fraction of beta,
// then randomize phases and the h/g split. The result is a class member by
// the coefficient condition, with margin beta(1-u) up to rounding.
HarmonicMap sample_member(rng_t& rng, const ClassParams& p, int max_degree = 16);

}  // namespace harmdisk
