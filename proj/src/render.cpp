#include "harmdisk/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace harmdisk {

namespace {

struct Curve {
    std::vector<complex_t> points;
    bool closed = false;
    bool boundary = false;
};

std::vector<Curve> trace_curves(const HarmonicMap& f, const RenderSpec& spec) {
    std::vector<Curve> curves;
    const int samples = spec.samples_per_curve;
    for (int i = 1; i <= spec.circles; ++i) {
        Curve curve;
        curve.closed = true;
        curve.boundary = (i == spec.circles);
        const double r = static_cast<double>(i) / static_cast<double>(spec.circles);
        curve.points.resize(static_cast<std::size_t>(samples));
        for (int k = 0; k < samples; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / samples;
            curve.points[static_cast<std::size_t>(k)] =
                eval_harmonic(f, complex_t{r * std::cos(theta), r * std::sin(theta)});
        }
        curves.push_back(std::move(curve));
    }
    for (int j = 0; j < spec.rays; ++j) {
        Curve curve;
        const double theta = 2.0 * std::numbers::pi * j / spec.rays;
        const complex_t dir{std::cos(theta), std::sin(theta)};
        curve.points.resize(static_cast<std::size_t>(samples));
        for (int k = 0; k < samples; ++k) {
            const double t = static_cast<double>(k + 1) / static_cast<double>(samples);
            curve.points[static_cast<std::size_t>(k)] = eval_harmonic(f, t * dir);
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

double polygonal_length(const Curve& curve) {
    double length = 0.0;
    for (std::size_t k = 1; k < curve.points.size(); ++k) {
        length += std::abs(curve.points[k] - curve.points[k - 1]);
    }
    if (curve.closed && !curve.points.empty()) {
        length += std::abs(curve.points.front() - curve.points.back());
    }
    return length;
}

struct Box {
    double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
    void include(complex_t w) {
        min_x = std::min(min_x, w.real());
        max_x = std::max(max_x, w.real());
        min_y = std::min(min_y, w.imag());
        max_y = std::max(max_y, w.imag());
    }
};

std::string fmt6(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6f", x);
    return buffer;
}

void write_svg(const std::vector<Curve>& curves, const std::string& path) {
    Box box;
    for (const Curve& c : curves) {
        for (const complex_t w : c.points) box.include(w);
    }
    const double pad = 0.05 * std::max(box.max_x - box.min_x, box.max_y - box.min_y) + 1e-6;
    const double width = box.max_x - box.min_x + 2.0 * pad;
    const double height = box.max_y - box.min_y + 2.0 * pad;

    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write image file: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt6(box.min_x - pad) << " "
        << fmt6(-box.max_y - pad) << " " << fmt6(width) << " " << fmt6(height) << "\">\n";
    out << "  <g fill=\"none\" stroke-width=\"" << fmt6(width / 600.0) << "\">\n";
    for (const Curve& c : curves) {
        out << "    <path stroke=\"" << (c.boundary ? "#000000" : "#4060a0") << "\" d=\"";
        for (std::size_t k = 0; k < c.points.size(); ++k) {
            // SVG y grows downward; flip the imaginary axis.
            out << (k == 0 ? "M" : " L") << fmt6(c.points[k].real()) << "," << fmt6(-c.points[k].imag());
        }
        if (c.closed) out << " Z";
        out << "\"/>\n";
    }
    out << "  </g>\n</svg>\n";
}

void write_ppm(const std::vector<Curve>& curves, const std::string& path) {
    constexpr int kSize = 800;
    Box box;
    for (const Curve& c : curves) {
        for (const complex_t w : c.points) box.include(w);
    }
    const double pad = 0.05 * std::max(box.max_x - box.min_x, box.max_y - box.min_y) + 1e-6;
    const double scale = (kSize - 1) / std::max(box.max_x - box.min_x + 2 * pad, box.max_y - box.min_y + 2 * pad);

    std::vector<unsigned char> pixels(static_cast<std::size_t>(kSize) * kSize * 3, 255);
    auto plot = [&](complex_t w, bool boundary) {
        const int x = static_cast<int>(std::lround((w.real() - box.min_x + pad) * scale));
        const int y = static_cast<int>(std::lround((box.max_y + pad - w.imag()) * scale));
        if (x < 0 || x >= kSize || y < 0 || y >= kSize) return;
        const std::size_t at = 3 * (static_cast<std::size_t>(y) * kSize + static_cast<std::size_t>(x));
        pixels[at] = 0;
        pixels[at + 1] = boundary ? 0 : 64;
        pixels[at + 2] = boundary ? 0 : 160;
    };
    for (const Curve& c : curves) {
        // Subdivide segments so curves stay connected at raster resolution.
        const std::size_t n = c.points.size() + (c.closed ? 1 : 0);
        for (std::size_t k = 1; k < n; ++k) {
            const complex_t a = c.points[k - 1];
            const complex_t b = c.points[k % c.points.size()];
            const int steps = std::max(1, static_cast<int>(std::abs(b - a) * scale) + 1);
            for (int s = 0; s <= steps; ++s) {
                const double t = static_cast<double>(s) / steps;
                plot(a + t * (b - a), c.boundary);
            }
        }
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write image file: " + path);
    out << "P6\n" << kSize << " " << kSize << "\n255\n";
    out.write(reinterpret_cast<const char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
}

}  // namespace

double render_map(const HarmonicMap& f, const RenderSpec& spec) {
    if (spec.circles < 2) throw std::domain_error("render needs at least 2 circles");
    if (spec.rays < 4) throw std::domain_error("render needs at least 4 rays");
    if (spec.samples_per_curve < 64) throw std::domain_error("render needs at least 64 samples per curve");
    if (spec.output_path.empty()) throw std::invalid_argument("render needs an output path");

    const std::vector<Curve> curves = trace_curves(f, spec);
    if (spec.format == RenderSpec::Format::svg) {
        write_svg(curves, spec.output_path);
    } else {
        write_ppm(curves, spec.output_path);
    }
    for (const Curve& c : curves) {
        if (c.boundary) return polygonal_length(c);
    }
    return 0.0;
}

}  // namespace harmdisk
