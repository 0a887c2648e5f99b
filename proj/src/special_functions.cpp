#include "harmdisk/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace harmdisk {

namespace {

constexpr double kTermCutoff = 1e-16;
constexpr long kMaxOracleTerms = 100000;

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::rint(x) == x; }

// Term ratio T_{n+1}/T_n of the hypergeometric series at z = 1.
double term_ratio(const HypergeometricParams& p, long n) {
    const double dn = static_cast<double>(n);
    return (p.a + dn) * (p.b + dn) / ((p.c + dn) * (dn + 1.0));
}

}  // namespace

double pochhammer(double x, int n) {
    if (n < 0) throw std::domain_error("pochhammer order must be nonnegative");
    double product = 1.0;
    for (int k = 0; k < n; ++k) {
        product *= x + static_cast<double>(k);
    }
    return product;
}

double ln_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("ln_gamma requires a positive argument");
    return std::lgamma(x);
}

HypergeometricParams::HypergeometricParams(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
    if (is_nonpositive_integer(c)) {
        throw std::domain_error("hypergeometric parameter c must not be zero or a negative integer");
    }
}

bool HypergeometricParams::terminating() const {
    return is_nonpositive_integer(a) || is_nonpositive_integer(b);
}

int HypergeometricParams::termination_degree() const {
    if (!terminating()) throw std::domain_error("series does not terminate");
    int degree = std::numeric_limits<int>::max();
    if (is_nonpositive_integer(a)) degree = std::min(degree, static_cast<int>(-a));
    if (is_nonpositive_integer(b)) degree = std::min(degree, static_cast<int>(-b));
    return degree;
}

std::complex<double> f21_truncated(const HypergeometricParams& p, std::complex<double> z, int N) {
    if (N < 0) throw std::domain_error("truncation degree must be nonnegative");
    const double az = std::abs(z);
    if (az > 1.0 + 1e-9) throw std::domain_error("hypergeometric series evaluated outside the closed disk");
    if (az > 1.0 - 1e-12 && !p.terminating() && !(p.c - p.a - p.b > 0.0)) {
        throw std::domain_error("hypergeometric series diverges on the unit circle for c - a - b <= 0");
    }
    std::complex<double> sum{0.0, 0.0};
    std::complex<double> term{1.0, 0.0};
    for (long n = 0; n <= N; ++n) {
        sum += term;
        term *= term_ratio(p, n) * z;
    }
    return sum;
}

double gauss_value(const HypergeometricParams& p) {
    if (p.terminating()) {
        const int m = p.termination_degree();
        double sum = 0.0;
        double term = 1.0;
        for (int n = 0; n <= m; ++n) {
            sum += term;
            term *= term_ratio(p, n);
        }
        return sum;
    }
    const double s = p.c - p.a - p.b;
    if (!(s > 0.0)) {
        throw std::domain_error("hypergeometric series diverges at z = 1 for c - a - b <= 0");
    }
    if (p.c > 0.0 && p.c - p.a > 0.0 && p.c - p.b > 0.0) {
        return std::exp(ln_gamma(p.c) + ln_gamma(s) - ln_gamma(p.c - p.a) - ln_gamma(p.c - p.b));
    }
    return gauss_series_value(p);  // convergent but outside the log-gamma domain
}

double gauss_series_value(const HypergeometricParams& p) {
    if (p.terminating()) return gauss_value(p);
    const double s = p.c - p.a - p.b;
    if (!(s > 0.0)) {
        throw std::domain_error("hypergeometric series diverges at z = 1 for c - a - b <= 0");
    }
    const int shift = s >= 3.5 ? 0 : static_cast<int>(std::ceil(3.5 - s));
    const HypergeometricParams shifted(p.a, p.b, p.c + shift);
    double sum = 0.0;
    double term = 1.0;
    for (long n = 0; n < 2000000; ++n) {
        sum += term;
        if (std::fabs(term) <= 1e-17 * std::fabs(sum)) break;
        term *= term_ratio(shifted, n);
    }
    for (int j = shift - 1; j >= 0; --j) {
        const double cj = p.c + static_cast<double>(j);
        sum *= (cj - p.a) * (cj - p.b) / (cj * (cj - p.a - p.b));
    }
    return sum;
}

double lemma_sum_closed(LemmaBranch branch, const HypergeometricParams& p, bool literal_form) {
    const double a = p.a, b = p.b, c = p.c;
    const double s = c - a - b;
    if (!(c > 0.0)) throw std::domain_error("lemma sums require positive c");
    if (!(c - a > 0.0 && c - b > 0.0) && !p.terminating()) {
        throw std::domain_error("closed form needs positive gamma arguments");
    }
    auto gamma_quotient = [&](double num_arg) {
        if (!(num_arg > 0.0)) throw std::domain_error("closed form needs positive gamma arguments");
        return std::exp(ln_gamma(c) + ln_gamma(num_arg) - ln_gamma(c - a) - ln_gamma(c - b));
    };
    switch (branch) {
        case LemmaBranch::a:
            if (!(c > a + b + 1.0)) throw std::domain_error("branch (a) requires c > a + b + 1");
            return gamma_quotient(s - 1.0) * (a * b + s - 1.0);
        case LemmaBranch::b:
            if (!(c > a + b + 2.0)) throw std::domain_error("branch (b) requires c > a + b + 2");
            return gamma_quotient(s) *
                   (pochhammer(a, 2) * pochhammer(b, 2) / pochhammer(s - 2.0, 2) + 3.0 * a * b / (s - 1.0) + 1.0);
        case LemmaBranch::c: {
            if (a == 1.0 || b == 1.0 || c == 1.0) {
                throw std::domain_error("branch (c) requires a, b, c != 1");
            }
            if (!(c > std::max(0.0, a + b + 1.0))) {
                throw std::domain_error("branch (c) requires c > max(0, a + b + 1)");
            }
            const double gamma_arg = literal_form ? s - 1.0 : s + 1.0;
            return (gamma_quotient(gamma_arg) - (c - 1.0)) / ((a - 1.0) * (b - 1.0));
        }
    }
    throw std::domain_error("unknown lemma branch");
}

IdentityCheck lemma_sum(LemmaBranch branch, const HypergeometricParams& p) {
    IdentityCheck check;
    check.closed_form = lemma_sum_closed(branch, p);
    if (branch == LemmaBranch::c) {
        check.literal_closed_form = lemma_sum_closed(branch, p, /*literal_form=*/true);
    }

    double sum = 0.0;
    double term = 1.0;  // (a)_n (b)_n / ((c)_n n!) at n = 0
    long n = 0;
    for (; n < kMaxOracleTerms; ++n) {
        const double dn = static_cast<double>(n);
        double weighted = term;
        switch (branch) {
            case LemmaBranch::a: weighted *= dn + 1.0; break;
            case LemmaBranch::b: weighted *= (dn + 1.0) * (dn + 1.0); break;
            case LemmaBranch::c: weighted /= dn + 1.0; break;
        }
        sum += weighted;
        if (std::fabs(weighted) < kTermCutoff) {
            ++n;
            break;
        }
        term *= term_ratio(p, n);
    }
    check.oracle_value = sum;
    check.terms_used = n;
    check.abs_gap = std::fabs(check.closed_form - check.oracle_value);
    check.slow_convergence = (p.c - p.a - p.b) < 0.1;
    return check;
}

}  // namespace harmdisk
