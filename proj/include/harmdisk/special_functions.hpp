// Pochhammer / log-gamma / Gauss hypergeometric kernel and the three
// closed-form weighted sums, each paired with a brute-force series oracle.
#pragma once

#include <complex>
#include <optional>

namespace harmdisk {

// Rising factorial x(x+1)...(x+n-1), computed by direct product so that
// negative-integer zeros are exact; (x)_0 = 1.
double pochhammer(double x, int n);

// log Gamma(x) for x > 0; throws std::domain_error otherwise. Relative error
// well below 1e-12 over (0, 170].
double ln_gamma(double x);

struct HypergeometricParams {
    double a;
    double b;
    double c;  // not zero or a negative integer

    HypergeometricParams(double a, double b, double c);

    // a or b a nonpositive integer: the series is a polynomial.
    bool terminating() const;
    // Degree of the terminating series (largest n with a nonzero term).
    int termination_degree() const;
};

// Partial sum sum_{n=0}^{N} (a)_n (b)_n / ((c)_n n!) z^n via the recursive
// term ratio. Requires |z| <= 1; on |z| = 1 the series must converge
// (c - a - b > 0) or terminate.
std::complex<double> f21_truncated(const HypergeometricParams& p, std::complex<double> z, int N);

// F(a,b;c;1) = Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)), computed in
// log space. Terminating series are summed exactly instead; non-terminating
// parameters with c-a or c-b <= 0 fall back to the series route. Throws on
// divergence (c - a - b <= 0 without termination).
double gauss_value(const HypergeometricParams& p);

// F(a,b;c;1) evaluated purely by series means: the tail at z = 1 decays like
// n^{-(c-a-b)-1}, too slowly to sum directly for small c-a-b, so the series
// for a c-shifted parameter set is summed (fast) and walked back down with
// the exact contiguous factors (c-a)(c-b)/(c(c-a-b)). No gamma calls; this is
// the independent oracle against the log-space route.
double gauss_series_value(const HypergeometricParams& p);

enum class LemmaBranch { a, b, c };

// Both sides of one closed-form sum identity:
//   (a) sum (n+1)   (a)_n(b)_n/((c)_n n!),      c > a+b+1
//   (b) sum (n+1)^2 (a)_n(b)_n/((c)_n n!),      c > a+b+2
//   (c) sum         (a)_n(b)_n/((c)_n (n+1)!),  a,b,c != 1, c > max(0, a+b+1)
// oracle_value is the raw partial sum with cutoff |term| < 1e-16 or 1e5
// terms, so abs_gap stays honest for slowly converging parameters.
struct IdentityCheck {
    double closed_form = 0.0;
    double oracle_value = 0.0;
    double abs_gap = 0.0;
    long terms_used = 0;
    bool slow_convergence = false;  // c - a - b < 0.1
    // Branch (c) only: value of the closed form with the gamma argument as
    // printed in the source identity, Gamma(c-a-b-1). It disagrees with the
    // series (sign flip at a=b=2, c=6); the corrected argument Gamma(c-a-b+1)
    // is the default closed_form.
    std::optional<double> literal_closed_form;
};

IdentityCheck lemma_sum(LemmaBranch branch, const HypergeometricParams& p);

// Closed form only. literal_form selects the printed gamma argument for
// branch (c); it is ignored by branches (a) and (b).
double lemma_sum_closed(LemmaBranch branch, const HypergeometricParams& p, bool literal_form = false);

}  // namespace harmdisk
