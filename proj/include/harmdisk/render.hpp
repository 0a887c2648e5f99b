// Disk-image rendering: the images under f of concentric circles and radial
// rays, plus the boundary curve f(e^{i theta}). SVG paths carry fixed
// 6-decimal coordinates and PPM output is binary P6; both are byte-stable for
// identical inputs.
#pragma once

#include <string>

#include "harmdisk/series.hpp"

namespace harmdisk {

struct RenderSpec {
    int circles = 8;            // >= 2; the outermost circle is |z| = 1
    int rays = 12;              // >= 4
    int samples_per_curve = 256;  // >= 64
    enum class Format { svg, ppm } format = Format::svg;
    std::string output_path;
};

// Writes the image file; returns the polygonal length of the boundary curve
// at the spec's sampling density.
double render_map(const HarmonicMap& f, const RenderSpec& spec);

}  // namespace harmdisk
