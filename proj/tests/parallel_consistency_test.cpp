// The OpenMP kernels must reproduce the serial reference bit for bit: points
// are evaluated independently and reduced in fixed index order.
#include <doctest.h>

#include "harmdisk/bounds.hpp"
#include "harmdisk/constructions.hpp"
#include "harmdisk/membership.hpp"
#include "harmdisk/sampling.hpp"
#include "harmdisk/sweep.hpp"

using namespace harmdisk;

TEST_CASE("sweep kernels: serial and parallel reductions agree exactly") {
    auto f = [](std::size_t i) {
        const double x = static_cast<double>(i) * 0.7311;
        return std::sin(x) * std::cos(x * 0.37) + 1.0 / (1.0 + x);
    };
    for (const std::size_t n : {1u, 7u, 64u, 4097u}) {
        CHECK(max_over(n, f, Exec::serial) == max_over(n, f, Exec::parallel));
        CHECK(min_over(n, f, Exec::serial) == min_over(n, f, Exec::parallel));
    }
}

TEST_CASE("certificates: serial and parallel paths are bit-identical") {
    rng_t rng(61);
    const GridSpec grid = GridSpec::default_spec();
    for (int i = 0; i < 10; ++i) {
        const ClassParams p = sample_params(rng);
        const HarmonicMap f = sample_member(rng, p);

        CHECK(grid_sup_certificate(f, p, grid, kDefaultTolerance, Exec::serial).margin ==
              grid_sup_certificate(f, p, grid, kDefaultTolerance, Exec::parallel).margin);
        CHECK(lambda_sweep(f, p, grid, 64, kDefaultTolerance, Exec::serial).margin ==
              lambda_sweep(f, p, grid, 64, kDefaultTolerance, Exec::parallel).margin);
        CHECK(derivative_bound_check(f, p, grid, 64, kDefaultTolerance, Exec::serial).margin ==
              derivative_bound_check(f, p, grid, 64, kDefaultTolerance, Exec::parallel).margin);
        CHECK(sense_preserving_certificate(f, grid, Exec::serial).margin ==
              sense_preserving_certificate(f, grid, Exec::parallel).margin);
        CHECK(injectivity_scan(f, grid, Exec::serial).margin ==
              injectivity_scan(f, grid, Exec::parallel).margin);
        CHECK(lipschitz_scan(f, GridSpec({0.3, 0.6, 0.9}, 48), Exec::serial).margin ==
              lipschitz_scan(f, GridSpec({0.3, 0.6, 0.9}, 48), Exec::parallel).margin);
        CHECK(boundary_length(f, 512, Exec::serial) == boundary_length(f, 512, Exec::parallel));

        const AnalyticSeries phi = convex_catalog(ConvexCatalog::log_map, 32);
        CHECK(herglotz_check(phi, grid.coarse(), Exec::serial).margin ==
              herglotz_check(phi, grid.coarse(), Exec::parallel).margin);
    }
}
