#pragma once

#include "brokenstick/events.hpp"

#include <string>

namespace brokenstick {

struct RegionPlot {
    double area_ratio = 0.0; // filled fraction of the model triangle
    int resolution = 0;
};

// Rasterizes event membership over the model triangle (2x2 subsamples per
// pixel) and writes an SVG: triangle outline plus the filled region.
// Throws std::runtime_error on file write errors.
RegionPlot plot_region(const EventDescriptor& e, int resolution, const std::string& path);

} // namespace brokenstick
