// Hypergeometric harmonic mappings, their sufficient membership conditions,
// the a = b = -m polynomial family, and the convolution transform with its
// convex-series catalog.
#pragma once

#include <optional>

#include "harmdisk/certificate.hpp"
#include "harmdisk/class_params.hpp"
#include "harmdisk/series.hpp"
#include "harmdisk/special_functions.hpp"
#include "harmdisk/sweep.hpp"

namespace harmdisk {

inline constexpr int kDefaultTruncation = 64;
inline constexpr int kMaxConditionDegree = 512;

enum class ConstructionKind { hyper_f1, hyper_f2, hyper_f3, poly_F1, poly_F2, poly_F3 };

// h = z in all kinds; the co-analytic part carries the hypergeometric tail:
//   hyper_f1: z + conj(z^2 F(a,b;c;z))
//   hyper_f2: z + conj(z (F(a,b;c;z) - 1))
//   hyper_f3: z + conj(z * integral_0^z F(a,b;c;t) dt)
// poly_Fk substitutes a = b = -m (binomial weights); the result is exactly a
// polynomial of g-degree m+2 (F1, F3) or m+1 (F2).
HarmonicMap build_hypergeometric(ConstructionKind kind, const HypergeometricParams& p,
                                 int truncation = kDefaultTruncation);
HarmonicMap build_polynomial(ConstructionKind kind, int m, double c);

struct ConstructionSpec {
    ConstructionKind kind;
    double a = 0.0;  // hyper kinds
    double b = 0.0;
    double c = 1.0;
    int m = 1;  // poly kinds
    int truncation = kDefaultTruncation;
};

HarmonicMap build(const ConstructionSpec& spec);

enum class ConditionKind { a, b, c };  // matching hyper_f1, hyper_f2, hyper_f3

// Sufficient-condition margin (condition RHS minus LHS; >= 0 means the map is
// certified into the class) plus the coefficient-sum crosscheck computed by
// direct summation of n(n+alpha-1)|C_n| until the term drops below
// 1e-14 * beta or degree 512.
//   kind a: beta/Lambda - [(a)_2(b)_2/((c-a-b-2)_2) + ab(alpha+4)/(c-a-b-1) + 2(1+alpha)]
//   kind b: (beta-alpha)/Lambda - [ab(ab+c-1)/((c-a-b-2)_2) + ab(1+alpha)/(c-a-b-1) + alpha]
//   kind c: beta - [S_a + (1+alpha) Lambda + alpha S_c], assembled from the
//           oracle-validated closed sums (the displayed one-line condition for
//           this kind drops a 2*Lambda term and inherits the branch-(c) gamma
//           defect, so it is not transcribed).
// Kind b additionally requires beta > alpha; kinds a, b require c > a+b+2 and
// kind c the branch-(c) preconditions.
struct ConditionReport {
    ConditionKind kind = ConditionKind::a;
    double margin = 0.0;
    double coefficient_margin_crosscheck = 0.0;
    double gauss_value = 0.0;       // Lambda used by the condition
    double tail_bound = 0.0;        // estimate of the coefficient sum dropped past the cap
    int truncation_degree = 0;      // degree the crosscheck actually summed to
};

ConditionReport condition_margin(ConditionKind kind, const HypergeometricParams& p, const ClassParams& cp);

// f * (phi + lambda conj(phi)) = (h * phi) + conj(conj(lambda) (g * phi)),
// with * the coefficient-wise product. lambda must be unimodular within 1e-12.
HarmonicMap convolution_transform(const HarmonicMap& f, const AnalyticSeries& phi, complex_t lambda);

// margin = min over grid of Re(phi(z)/z) - 1/2. Requires phi(0) = 0,
// phi'(0) = 1. This is the operative hypothesis for convolution closure;
// convexity of phi is only its sufficient condition. Truncated series deviate
// from their limits near |z| = 1 (a degree-N tail of z/(1-z) contributes
// r^N/(1-r)), so gate checks should use the coarse sub-grid.
Certificate herglotz_check(const AnalyticSeries& phi, const GridSpec& grid, Exec exec = Exec::parallel);

enum class ConvexCatalog { half_plane, log_map };

// half_plane: truncation of z/(1-z) (all coefficients 1);
// log_map: truncation of -log(1-z) (coefficients 1/n). N >= 2.
AnalyticSeries convex_catalog(ConvexCatalog name, int N);

}  // namespace harmdisk
