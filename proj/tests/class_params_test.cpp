#include <doctest.h>

#include <cmath>
#include <random>

#include "harmdisk/class_params.hpp"

using namespace harmdisk;

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ClassParams(-1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(ClassParams(0.0, 0.0), std::domain_error);
    CHECK_NOTHROW(ClassParams(-0.999999, 1e-9));
}

TEST_CASE("close-to-convexity threshold") {
    CHECK(beta_max_close_to_convex(0.0) == 1.0);
    CHECK(beta_max_close_to_convex(1.0) == 2.0);
    CHECK(beta_max_close_to_convex(-1.0 + 1e-9) == doctest::Approx(1e-9).epsilon(1e-6));
    CHECK_THROWS_AS(beta_max_close_to_convex(-1.0), std::domain_error);
}

TEST_CASE("convexity threshold values") {
    CHECK(beta_max_convex(0.0) == 0.5);
    CHECK(beta_max_convex(1.0) == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-15));
    CHECK(beta_max_convex(2.0) == 0.75);
}

TEST_CASE("convexity threshold is continuous at the four breakpoints") {
    const double s5 = std::sqrt(5.0);
    const double breaks[4] = {s5 - 2.0, 1.0, 2.0 / (s5 - 1.0), 2.0};
    auto adjacent = [&](int i, double a) -> std::pair<double, double> {
        switch (i) {
            case 0: return {(1.0 + a) / (2.0 + a), (1.0 + a) / s5};
            case 1: return {(1.0 + a) / s5, (1.0 + a) / (a * s5)};
            case 2: return {(1.0 + a) / (a * s5), (1.0 + a) / (2.0 + a)};
            default: return {(1.0 + a) / (2.0 + a), (1.0 + a) / (2.0 * a)};
        }
    };
    for (int i = 0; i < 4; ++i) {
        const auto [left, right] = adjacent(i, breaks[i]);
        CHECK(std::fabs(left - right) <= 1e-12);
        CHECK(std::fabs(beta_max_convex(breaks[i]) - left) <= 1e-12);
    }
}

TEST_CASE("close-to-convexity dominates convexity") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> alpha(-0.999, 10.0);
    for (int i = 0; i < 1000; ++i) {
        const double a = alpha(rng);
        CHECK(beta_max_close_to_convex(a) >= beta_max_convex(a));
    }
}

TEST_CASE("starlike threshold branches") {
    const double e2 = std::exp(2.0);
    const double at_one = 4.0 * e2 / (1.0 + e2);
    CHECK(*beta_max_starlike(1.0) == doctest::Approx(at_one).epsilon(1e-15));
    CHECK(at_one == doctest::Approx(3.5231883119).epsilon(1e-9));

    // alpha = 2 literal: 2*3/(2 + 2^-2) = 6/2.25
    CHECK(*beta_max_starlike(2.0, StarlikeMode::literal) == doctest::Approx(6.0 / 2.25).epsilon(1e-15));
    CHECK(*beta_max_starlike(2.0, StarlikeMode::continuous) == doctest::Approx(6.0 / 1.25).epsilon(1e-15));

    // the continuous mode approaches the alpha = 1 value; the literal one does not
    CHECK(*beta_max_starlike(1.0 + 1e-9) == doctest::Approx(at_one).epsilon(1e-7));
    CHECK(*beta_max_starlike(1.0 - 1e-9) == doctest::Approx(at_one).epsilon(1e-7));
    CHECK(std::fabs(*beta_max_starlike(1.0 + 1e-9, StarlikeMode::literal) - at_one) > 1.0);

    // no real branch for alpha <= 0
    CHECK_FALSE(beta_max_starlike(0.0).has_value());
    CHECK_FALSE(beta_max_starlike(-0.5).has_value());
}

TEST_CASE("classify regimes") {
    const RegimeReport r1 = classify(ClassParams(0.0, 0.4));
    CHECK(r1.close_to_convex);
    CHECK(r1.convex);

    const RegimeReport r2 = classify(ClassParams(0.0, 1.0));
    CHECK(r2.close_to_convex);  // boundary counts as inside
    CHECK_FALSE(r2.convex);
    CHECK_FALSE(r2.starlike.has_value());

    const RegimeReport r3 = classify(ClassParams(0.0, 2.0));
    CHECK_FALSE(r3.close_to_convex);
    CHECK_FALSE(r3.convex);

    const RegimeReport r4 = classify(ClassParams(1.0, 3.0));
    CHECK(r4.starlike.has_value());
    CHECK(*r4.starlike);
}

TEST_CASE("classify is monotone in beta") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> alpha(-0.9, 6.0);
    std::uniform_real_distribution<double> beta(1e-3, 8.0);
    for (int i = 0; i < 500; ++i) {
        const double a = alpha(rng);
        double b1 = beta(rng), b2 = beta(rng);
        if (b2 < b1) std::swap(b1, b2);
        const RegimeReport lo = classify(ClassParams(a, b1));
        const RegimeReport hi = classify(ClassParams(a, b2));
        CHECK_FALSE(hi.close_to_convex && !lo.close_to_convex);
        CHECK_FALSE(hi.convex && !lo.convex);
        if (hi.starlike && lo.starlike) CHECK_FALSE(*hi.starlike && !*lo.starlike);
    }
}
