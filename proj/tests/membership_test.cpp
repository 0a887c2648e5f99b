#include <doctest.h>

#include <cmath>
#include <numbers>

#include "harmdisk/bounds.hpp"
#include "harmdisk/membership.hpp"
#include "harmdisk/sampling.hpp"

using namespace harmdisk;

namespace {

const ClassParams kUnit01{0.0, 1.0};

HarmonicMap identity_map() { return HarmonicMap(AnalyticSeries::identity(1), AnalyticSeries::zero(1)); }

HarmonicMap z_plus_z2() {
    std::vector<complex_t> h = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}};
    return HarmonicMap(AnalyticSeries{h}, AnalyticSeries::zero(2));
}

}  // namespace

TEST_CASE("coefficient_margin examples") {
    const HarmonicMap theta = make_extremal(ExtremalKind::theta, 2, kUnit01);
    const Certificate ct = coefficient_margin(theta, kUnit01);
    CHECK(std::fabs(ct.margin) <= 1e-15);
    CHECK(ct.passed);

    const Certificate cid = coefficient_margin(identity_map(), ClassParams(0.3, 2.5));
    CHECK(cid.margin == 2.5);

    const Certificate cfail = coefficient_margin(z_plus_z2(), kUnit01);
    CHECK(cfail.margin == -1.0);
    CHECK_FALSE(cfail.passed);

    const HarmonicMap not_h0(AnalyticSeries::identity(2),
                             AnalyticSeries{{complex_t{0, 0}, complex_t{0.5, 0}, complex_t{0, 0}}});
    CHECK_THROWS_AS(coefficient_margin(not_h0, kUnit01), std::domain_error);
}

TEST_CASE("grid_sup_certificate closed forms") {
    const GridSpec grid = GridSpec::default_spec();

    const Certificate cid = grid_sup_certificate(identity_map(), ClassParams(0.5, 1.5), grid);
    CHECK(cid.margin == 1.5);
    CHECK(cid.passed);

    const HarmonicMap theta = make_extremal(ExtremalKind::theta, 2, kUnit01);
    const Certificate ctheta = grid_sup_certificate(theta, kUnit01, grid);
    CHECK(ctheta.margin == doctest::Approx(1.0 - 0.999).epsilon(1e-9));
    CHECK(ctheta.passed);

    const ClassParams p(1.5, 2.0);
    const HarmonicMap f1 = make_extremal(ExtremalKind::growth_analytic, 2, p);
    CHECK(grid_sup_certificate(f1, p, grid).margin ==
          doctest::Approx(p.beta * (1.0 - 0.999)).epsilon(1e-9));

    // analytic z + z^2 has defect 2r -> sup 1.998 > 1
    const Certificate cfail = grid_sup_certificate(z_plus_z2(), kUnit01, grid);
    CHECK(cfail.margin == doctest::Approx(1.0 - 2.0 * 0.999).epsilon(1e-9));
    CHECK_FALSE(cfail.passed);
}

TEST_CASE("lambda_sweep") {
    const GridSpec grid = GridSpec::default_spec();

    // g = 0: sweep value is lambda-independent and equals the analytic defect
    const HarmonicMap f1 = make_extremal(ExtremalKind::growth_analytic, 2, kUnit01);
    const Certificate sweep = lambda_sweep(f1, kUnit01, grid, 8);
    const Certificate sup = grid_sup_certificate(f1, kUnit01, grid);
    CHECK(sweep.margin == doctest::Approx(sup.margin).epsilon(1e-12));

    // theta: lambda = -1 attains |z| on the slice z + z^2/2
    const HarmonicMap theta = make_extremal(ExtremalKind::theta, 2, kUnit01);
    const Certificate sweep4 = lambda_sweep(theta, kUnit01, grid, 8);
    CHECK(sweep4.margin == doctest::Approx(1.0 - 0.999).epsilon(1e-9));

    CHECK_THROWS_AS(lambda_sweep(theta, kUnit01, grid, 4), std::domain_error);
}

TEST_CASE("lambda_sweep never exceeds the grid_sup defect") {
    rng_t rng(21);
    const GridSpec grid({0.2, 0.5, 0.9, 0.99}, 64);
    for (int i = 0; i < 25; ++i) {
        const ClassParams p = sample_params(rng);
        const HarmonicMap f = sample_member(rng, p);
        for (int k : {8, 16, 32, 64}) {
            CHECK(lambda_sweep(f, p, grid, k).margin >= grid_sup_certificate(f, p, grid).margin - 1e-12);
        }
    }
}

TEST_CASE("derivative_bound_check") {
    const GridSpec grid = GridSpec::default_spec();

    const Certificate cid = derivative_bound_check(identity_map(), ClassParams(0.5, 1.0), grid, 16);
    CHECK(cid.margin >= 0.0);
    CHECK(cid.passed);

    // theta at lambda = -1 attains the bound exactly; the sweep margin sits at 0
    const HarmonicMap theta = make_extremal(ExtremalKind::theta, 2, kUnit01);
    const Certificate ct = derivative_bound_check(theta, kUnit01, grid, 256);
    CHECK(std::fabs(ct.margin) <= 1e-12);
    CHECK(ct.passed);

    // growth extremal: |f1' - 1| = (beta/(1+alpha))|z| exactly, any lambda
    const ClassParams p(1.0, 2.0);
    const HarmonicMap f1 = make_extremal(ExtremalKind::growth_analytic, 2, p);
    const Certificate cf = derivative_bound_check(f1, p, grid, 16);
    CHECK(std::fabs(cf.margin) <= 1e-12);
}

TEST_CASE("sense_preserving_certificate") {
    const GridSpec grid = GridSpec::default_spec();

    CHECK(sense_preserving_certificate(identity_map(), grid).margin == 1.0);

    const HarmonicMap theta = make_extremal(ExtremalKind::theta, 2, kUnit01);
    const Certificate ct = sense_preserving_certificate(theta, grid);
    CHECK(ct.margin == doctest::Approx(1.0 - 0.999).epsilon(1e-9));
    CHECK(ct.passed);

    // g = h is lambda-degenerate: Jacobian vanishes identically and the map fails
    std::vector<complex_t> h = {{0.0, 0.0}, {1.0, 0.0}, {0.25, 0.0}};
    const HarmonicMap degenerate(AnalyticSeries{h}, AnalyticSeries{h});
    const Certificate cd = sense_preserving_certificate(degenerate, grid);
    CHECK(cd.margin == 0.0);
    CHECK_FALSE(cd.passed);
}

TEST_CASE("injectivity_scan") {
    const GridSpec grid({0.3, 0.6, 0.9}, 32);

    const Certificate cid = injectivity_scan(identity_map(), grid);
    CHECK(cid.margin == 1.0);
    CHECK(cid.passed);

    const HarmonicMap theta = make_extremal(ExtremalKind::theta, 2, kUnit01);
    CHECK(injectivity_scan(theta, grid).margin > 0.0);

    // proxy semantics: out-of-class maps still produce a finite report
    const Certificate cz = injectivity_scan(z_plus_z2(), grid);
    CHECK(std::isfinite(cz.margin));
}

TEST_CASE("soundness chain: coefficient members pass the grid certificate") {
    rng_t rng(22);
    const GridSpec grid = GridSpec::default_spec();
    for (int i = 0; i < 200; ++i) {
        const ClassParams p = sample_params(rng);
        const HarmonicMap f = sample_member(rng, p);
        REQUIRE(coefficient_margin(f, p).margin >= -1e-12);
        CHECK(grid_sup_certificate(f, p, grid).margin >= -1e-9);
    }
}

TEST_CASE("discrete lambda maximum: nested, bounded, gap-controlled") {
    rng_t rng(23);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const complex_t a{box(rng), box(rng)};
        const complex_t b{box(rng), box(rng)};
        const double full = std::abs(a) + std::abs(b);
        double prev = 0.0;
        for (int k = 8; k <= 512; k *= 2) {
            double best = 0.0;
            for (int j = 0; j < k; ++j) {
                best = std::max(best, std::abs(a + std::polar(1.0, 2.0 * std::numbers::pi * j / k) * b));
            }
            CHECK(best >= prev - 1e-15);  // doubling K refines a nested sample set
            CHECK(best <= full + 1e-12);
            CHECK(full - best <= std::abs(b) * (1.0 - std::cos(std::numbers::pi / k)) + 1e-12);
            prev = best;
        }
    }
}

TEST_CASE("rotation closure: margins are invariant under quarter-turn of g") {
    rng_t rng(24);
    const GridSpec grid({0.2, 0.6, 0.9, 0.99}, 128);
    for (int i = 0; i < 20; ++i) {
        const ClassParams p = sample_params(rng);
        const HarmonicMap f = sample_member(rng, p);
        std::vector<complex_t> g = f.g().coeffs();
        for (auto& v : g) v *= complex_t{0.0, 1.0};
        const HarmonicMap rotated(f.h(), AnalyticSeries{g});
        CHECK(grid_sup_certificate(f, p, grid).margin == grid_sup_certificate(rotated, p, grid).margin);
    }
}

TEST_CASE("certificates are deterministic") {
    rng_t rng(25);
    const ClassParams p = sample_params(rng);
    const HarmonicMap f = sample_member(rng, p);
    const GridSpec grid = GridSpec::default_spec();
    CHECK(grid_sup_certificate(f, p, grid).margin == grid_sup_certificate(f, p, grid).margin);
    CHECK(lambda_sweep(f, p, grid).margin == lambda_sweep(f, p, grid).margin);
    CHECK(injectivity_scan(f, grid).margin == injectivity_scan(f, grid).margin);
}
