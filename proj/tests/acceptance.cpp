// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Tolerances are pinned in code next to each criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "harmdisk/bounds.hpp"
#include "harmdisk/constructions.hpp"
#include "harmdisk/membership.hpp"
#include "harmdisk/sampling.hpp"
#include "harmdisk/special_functions.hpp"
#include "harmdisk/verify.hpp"

using namespace harmdisk;

namespace {

int failures = 0;

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

void report(int index, const char* name, bool passed, const char* detail, double seconds) {
    std::printf("[%2d] %s  %-28s %s  (%.2fs)\n", index, passed ? "PASS" : "FAIL", name, detail, seconds);
    if (!passed) ++failures;
}

struct MemberSet {
    std::vector<ClassParams> params;
    std::vector<HarmonicMap> maps;
};

MemberSet sample_members(std::uint64_t seed, int count) {
    rng_t rng(seed);
    MemberSet set;
    set.params.reserve(count);
    set.maps.reserve(count);
    for (int i = 0; i < count; ++i) {
        const ClassParams p = sample_params(rng);  // beta <= 1 + alpha throughout
        set.params.push_back(p);
        set.maps.push_back(sample_member(rng, p));
    }
    return set;
}

void criterion_1_theta_exactness() {
    const double t0 = now_seconds();
    rng_t rng(101);
    std::uniform_real_distribution<double> alpha_dist(-0.999999, 5.0);
    std::uniform_real_distribution<double> unit(1e-6, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double alpha = alpha_dist(rng);
        const ClassParams p(alpha, unit(rng) * (1.0 + alpha));
        const HarmonicMap theta = make_extremal(ExtremalKind::theta, 2, p);
        worst = std::max(worst, std::fabs(coefficient_margin(theta, p).margin) / p.beta);
    }
    const double dt = now_seconds() - t0;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "worst |margin|/beta = %.2e, budget 1e-15", worst);
    report(1, "theta exactness", worst <= 1e-15 && dt < 1.0, detail, dt);
}

void criterion_2_sufficiency_chain(const MemberSet& members) {
    const double t0 = now_seconds();
    const GridSpec grid = GridSpec::default_spec();
    double worst = 1e300;
    for (std::size_t i = 0; i < members.maps.size(); ++i) {
        worst = std::min(worst, grid_sup_certificate(members.maps[i], members.params[i], grid).margin);
    }
    const double dt = now_seconds() - t0;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "1000 members, min grid margin = %.2e >= -1e-9", worst);
    report(2, "sufficiency chain", worst >= -1e-9 && dt < 30.0, detail, dt);
}

void criterion_3_sharpness() {
    const double t0 = now_seconds();
    rng_t rng(103);
    bool exact = true;
    double worst = 0.0;
    for (int n = 2; n <= 10; ++n) {
        for (int i = 0; i < 20; ++i) {
            const ClassParams p = sample_params(rng);
            const HarmonicMap f = make_extremal(ExtremalKind::coeff_analytic, n, p);
            if (std::abs(f.h().coeff(n)) != coeff_bound(n, p)) exact = false;
            const double got = defect(f, p, complex_t{0.999, 0.0});
            const double want = p.beta * std::pow(0.999, n - 1);
            worst = std::max(worst, std::fabs(got - want));
        }
    }
    const double dt = now_seconds() - t0;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "|a_n| exact: %s, defect gap = %.2e <= 1e-10",
                  exact ? "yes" : "NO", worst);
    report(3, "coefficient sharpness", exact && worst <= 1e-10, detail, dt);
}

void criterion_4_growth_envelope(const MemberSet& members) {
    const double t0 = now_seconds();
    rng_t rng(104);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 1e300;
    for (std::size_t i = 0; i < members.maps.size(); ++i) {
        for (int k = 0; k < 64; ++k) {
            const complex_t z = std::polar(0.999 * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
            const GrowthEnvelope env = growth_envelope(std::abs(z), members.params[i]);
            const double v = std::abs(eval_harmonic(members.maps[i], z));
            worst = std::min({worst, v - env.lower, env.upper - v});
        }
    }
    bool attained = true;
    for (int i = 0; i < 50; ++i) {
        const ClassParams p = sample_params(rng);
        const HarmonicMap extremal = make_extremal(ExtremalKind::growth_analytic, 2, p);
        for (const double r : {0.25, 0.5, 0.75}) {
            if (std::abs(eval_harmonic(extremal, complex_t{r, 0.0})) != growth_envelope(r, p).upper) {
                attained = false;
            }
        }
    }
    const double dt = now_seconds() - t0;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "containment slack = %.2e >= -1e-10, attainment exact: %s",
                  worst, attained ? "yes" : "NO");
    report(4, "growth envelope", worst >= -1e-10 && attained, detail, dt);
}

void criterion_5_lipschitz_boundary(const MemberSet& members) {
    const double t0 = now_seconds();
    rng_t rng(105);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 1e300;
    long pairs = 0;
    bool lengths_ok = true;
    const double four_pi = 4.0 * std::numbers::pi;
    for (std::size_t i = 0; i < members.maps.size(); ++i) {
        for (int k = 0; k < 10; ++k) {
            const complex_t z1 = std::polar(0.99 * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
            const complex_t z2 = std::polar(0.99 * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
            const double dz = std::abs(z1 - z2);
            if (dz == 0.0) continue;
            const double df = std::abs(eval_harmonic(members.maps[i], z1) - eval_harmonic(members.maps[i], z2));
            worst = std::min(worst, 2.0 * dz + 1e-10 - df);
            ++pairs;
        }
        if (!(boundary_length(members.maps[i], 1024) < four_pi)) lengths_ok = false;
    }
    const double dt = now_seconds() - t0;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "%ld pairs, worst slack = %.2e, lengths < 4pi: %s", pairs,
                  worst, lengths_ok ? "yes" : "NO");
    report(5, "lipschitz and boundary", worst >= 0.0 && lengths_ok, detail, dt);
}

void criterion_6_sense_preservation(const MemberSet& members) {
    const double t0 = now_seconds();
    const GridSpec grid = GridSpec::default_spec();
    double worst = 1e300;
    for (std::size_t i = 0; i < members.maps.size(); ++i) {
        worst = std::min(worst, sense_preserving_certificate(members.maps[i], grid).margin);
    }
    const double dt = now_seconds() - t0;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "min Jacobian over grid = %.2e > 0", worst);
    report(6, "sense preservation", worst > 0.0, detail, dt);
}

void criterion_7_special_functions() {
    const double t0 = now_seconds();
    rng_t rng(107);
    std::uniform_real_distribution<double> ab(0.1, 2.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst_ab = 0.0, worst_c = 0.0, worst_gauss = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double a = ab(rng);
        const double b = unit(rng) < 0.3 ? a : ab(rng);
        {
            const HypergeometricParams p(a, b, a + b + 4.0 + 3.0 * unit(rng));
            const IdentityCheck check = lemma_sum(LemmaBranch::a, p);
            worst_ab = std::max(worst_ab, check.abs_gap / std::fabs(check.closed_form));
        }
        {
            const HypergeometricParams p(a, b, a + b + 6.0 + 3.0 * unit(rng));
            const IdentityCheck check = lemma_sum(LemmaBranch::b, p);
            worst_ab = std::max(worst_ab, check.abs_gap / std::fabs(check.closed_form));
        }
        {
            const HypergeometricParams p(a, b, a + b + 1.5 + 3.5 * unit(rng));
            const IdentityCheck check = lemma_sum(LemmaBranch::c, p);
            worst_c = std::max(worst_c, check.abs_gap / std::fabs(check.closed_form));
        }
        {
            const double aa = 0.1 + 2.9 * unit(rng);
            const double bb = 0.1 + 2.9 * unit(rng);
            const HypergeometricParams p(aa, bb, aa + bb + 0.5 + 4.5 * unit(rng));
            worst_gauss = std::max(
                worst_gauss, std::fabs(gauss_value(p) - gauss_series_value(p)) / std::fabs(gauss_value(p)));
        }
    }
    const IdentityCheck defect_doc = lemma_sum(LemmaBranch::c, HypergeometricParams(2.0, 2.0, 6.0));
    const double literal_gap = std::fabs(defect_doc.closed_form - *defect_doc.literal_closed_form);
    const bool gap_documented = std::fabs(literal_gap - 10.0 / 3.0) <= 1e-8;
    const double dt = now_seconds() - t0;
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "lemma a/b %.1e, c %.1e (<=1e-8), gauss %.1e (<=1e-9), literal gap 10/3: %s", worst_ab,
                  worst_c, worst_gauss, gap_documented ? "yes" : "NO");
    report(7, "special-function oracles",
           worst_ab <= 1e-8 && worst_c <= 1e-8 && worst_gauss <= 1e-9 && gap_documented && dt < 10.0,
           detail, dt);
}

void criterion_8_construction_consistency() {
    const double t0 = now_seconds();
    rng_t rng(108);
    std::uniform_real_distribution<double> ab(0.1, 1.5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst = 1e300;
    long satisfied = 0;
    for (const ConditionKind kind : {ConditionKind::a, ConditionKind::b, ConditionKind::c}) {
        for (int i = 0; i < 200; ++i) {
            const double a = ab(rng);
            const double b = unit(rng) < 0.3 ? a : ab(rng);
            const double slack = kind == ConditionKind::c ? 1.0 + 5.0 * unit(rng) : 2.1 + 5.0 * unit(rng);
            const HypergeometricParams p(a, b, a + b + slack);
            const double alpha = kind == ConditionKind::b ? 2.0 * unit(rng) : -0.9 + 3.0 * unit(rng);
            const double beta = 0.2 + 8.0 * unit(rng) + (kind == ConditionKind::b ? alpha : 0.0);
            const ConditionReport report_k = condition_margin(kind, p, ClassParams(alpha, beta));
            if (report_k.margin >= 0.0) {
                ++satisfied;
                worst = std::min(worst, report_k.coefficient_margin_crosscheck);
            }
        }
    }
    const ConditionReport fixed =
        condition_margin(ConditionKind::a, HypergeometricParams(-1.0, -1.0, 1.0), ClassParams(0.0, 8.0));
    const bool fixed_exact = fixed.margin == 0.0 && fixed.coefficient_margin_crosscheck == 0.0;
    const double dt = now_seconds() - t0;
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "%ld/600 satisfied, min crosscheck = %.2e >= -1e-9, fixed instance exact: %s",
                  satisfied, worst, fixed_exact ? "yes" : "NO");
    report(8, "construction consistency", worst >= -1e-9 && satisfied > 100 && fixed_exact, detail, dt);
}

void criterion_9_corollary_equivalence() {
    const double t0 = now_seconds();
    bool exact = true;
    const std::pair<ConstructionKind, ConstructionKind> kinds[3] = {
        {ConstructionKind::poly_F1, ConstructionKind::hyper_f1},
        {ConstructionKind::poly_F2, ConstructionKind::hyper_f2},
        {ConstructionKind::poly_F3, ConstructionKind::hyper_f3},
    };
    for (const double c : {1.0, 2.0, 5.5}) {
        for (int m = 1; m <= 6; ++m) {
            for (const auto& [poly_kind, hyper_kind] : kinds) {
                const HarmonicMap poly = build_polynomial(poly_kind, m, c);
                const HarmonicMap hyper = build_hypergeometric(
                    hyper_kind, HypergeometricParams(-static_cast<double>(m), -static_cast<double>(m), c));
                if (poly.degree() != hyper.degree()) exact = false;
                for (int n = 0; n <= poly.degree() && exact; ++n) {
                    if (poly.g().coeff(n) != hyper.g().coeff(n)) exact = false;
                }
            }
        }
    }
    const double dt = now_seconds() - t0;
    report(9, "corollary equivalence", exact,
           exact ? "poly_Fk == hyper_fk(-m,-m,c) bitwise, m=1..6, c in {1,2,5.5}" : "coefficient mismatch",
           dt);
}

void criterion_10_closure_operators() {
    const double t0 = now_seconds();
    rng_t rng(110);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const GridSpec grid = GridSpec::default_spec();
    double worst = 1e300;
    for (int i = 0; i < 20; ++i) {
        const ClassParams p = sample_params(rng);
        std::vector<HarmonicMap> members;
        std::vector<double> ws(5);
        double total = 0.0;
        for (int k = 0; k < 5; ++k) {
            members.push_back(sample_member(rng, p));
            ws[static_cast<std::size_t>(k)] = unit(rng) + 1e-3;
            total += ws[static_cast<std::size_t>(k)];
        }
        for (auto& w : ws) w /= total;
        worst = std::min(worst, grid_sup_certificate(convex_combination(members, ws), p, grid).margin);

        const HarmonicMap f = sample_member(rng, p);
        for (const ConvexCatalog name : {ConvexCatalog::half_plane, ConvexCatalog::log_map}) {
            const AnalyticSeries phi = convex_catalog(name, kDefaultTruncation);
            for (int k = 0; k < 16; ++k) {
                const complex_t lambda =
                    std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / 16.0);
                worst = std::min(
                    worst, grid_sup_certificate(convolution_transform(f, phi, lambda), p, grid).margin);
            }
        }
    }
    const double dt = now_seconds() - t0;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "min closure margin = %.2e >= -1e-9", worst);
    report(10, "closure operators", worst >= -1e-9, detail, dt);
}

void criterion_11_regime_thresholds() {
    const double t0 = now_seconds();
    const double s5 = std::sqrt(5.0);
    double worst = 0.0;
    const double b0 = s5 - 2.0;
    worst = std::max(worst, std::fabs((1.0 + b0) / (2.0 + b0) - (1.0 + b0) / s5));
    worst = std::max(worst, std::fabs((1.0 + 1.0) / s5 - (1.0 + 1.0) / (1.0 * s5)));
    const double b2 = 2.0 / (s5 - 1.0);
    worst = std::max(worst, std::fabs((1.0 + b2) / (b2 * s5) - (1.0 + b2) / (2.0 + b2)));
    worst = std::max(worst, std::fabs((1.0 + 2.0) / (2.0 + 2.0) - (1.0 + 2.0) / (2.0 * 2.0)));
    for (const double brk : {b0, 1.0, b2, 2.0}) {
        worst = std::max(worst, std::fabs(beta_max_convex(brk - 1e-14) - beta_max_convex(brk + 1e-14)));
    }
    const double e2 = std::exp(2.0);
    const double star_gap = std::fabs(*beta_max_starlike(1.0) - 4.0 * e2 / (1.0 + e2));
    const double dt = now_seconds() - t0;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "breakpoint gap = %.2e <= 1e-12, starlike(1) gap = %.2e",
                  worst, star_gap);
    report(11, "regime thresholds", worst <= 1e-12 && star_gap <= 1e-12, detail, dt);
}

void criterion_12_determinism() {
    const double t0 = now_seconds();
    const std::string first = run_verify("all", 7).dump();
    const std::string second = run_verify("all", 7).dump();
    const bool identical = first == second;
    const bool passed_all = verify_passed(run_verify("all", 7));
    const double dt = now_seconds() - t0;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "byte-identical: %s, suites green: %s, budget 120s",
                  identical ? "yes" : "NO", passed_all ? "yes" : "NO");
    report(12, "verify determinism", identical && passed_all && dt < 120.0, detail, dt);
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    const MemberSet members = sample_members(102, 1000);

    criterion_1_theta_exactness();
    criterion_2_sufficiency_chain(members);
    criterion_3_sharpness();
    criterion_4_growth_envelope(members);
    criterion_5_lipschitz_boundary(members);
    criterion_6_sense_preservation(members);
    criterion_7_special_functions();
    criterion_8_construction_consistency();
    criterion_9_corollary_equivalence();
    criterion_10_closure_operators();
    criterion_11_regime_thresholds();
    criterion_12_determinism();

    std::printf("%d of 12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
