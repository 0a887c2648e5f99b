// Data-parallel reduction kernels used by the grid sweeps.
//
// Every sweep computes an independent value per sample point and reduces with
// min or max. The parallel path evaluates points with OpenMP into an indexed
// buffer and then reduces in ascending index order, so the result is
// bit-identical to the serial reference path regardless of thread count or
// schedule. The serial path is kept as the reference implementation for the
// consistency tests and the benchmark.
#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace harmdisk {

enum class Exec { serial, parallel };

namespace detail {

template <typename Fn>
std::vector<double> evaluate_points(std::size_t count, const Fn& fn, Exec exec) {
    std::vector<double> values(count);
#ifdef _OPENMP
    if (exec == Exec::parallel) {
        const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < n; ++i) {
            values[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        }
        return values;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < count; ++i) {
        values[i] = fn(i);
    }
    return values;
}

}  // namespace detail

// Maximum of fn(0..count-1), reduced in index order. Returns -inf for an
// empty range.
template <typename Fn>
double max_over(std::size_t count, const Fn& fn, Exec exec = Exec::parallel) {
    if (exec == Exec::serial) {
        double acc = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < count; ++i) {
            const double v = fn(i);
            if (v > acc) acc = v;
        }
        return acc;
    }
    const std::vector<double> values = detail::evaluate_points(count, fn, exec);
    double acc = -std::numeric_limits<double>::infinity();
    for (const double v : values) {
        if (v > acc) acc = v;
    }
    return acc;
}

// Minimum of fn(0..count-1), reduced in index order. Returns +inf for an
// empty range.
template <typename Fn>
double min_over(std::size_t count, const Fn& fn, Exec exec = Exec::parallel) {
    if (exec == Exec::serial) {
        double acc = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < count; ++i) {
            const double v = fn(i);
            if (v < acc) acc = v;
        }
        return acc;
    }
    const std::vector<double> values = detail::evaluate_points(count, fn, exec);
    double acc = std::numeric_limits<double>::infinity();
    for (const double v : values) {
        if (v < acc) acc = v;
    }
    return acc;
}

}  // namespace harmdisk
