#include "brokenstick/svg.hpp"

#include "brokenstick/model.hpp"
#include "brokenstick/predicates.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace brokenstick {

namespace {

bool member(const EventDescriptor& e, double x, double y) {
    ModelPoint p{x, y};
    if (!inside_model_triangle(p, 0.0)) return false;
    auto r = evaluate(e, point_to_triple(p));
    return r.has_value() && *r;
}

} // namespace

RegionPlot plot_region(const EventDescriptor& e, int resolution, const std::string& path) {
    if (resolution < 64 || resolution > 4096)
        throw std::invalid_argument("plot resolution must be in [64, 4096]");

    const int w = resolution;
    const int h = resolution;
    // bounding box of the model triangle
    const double x0 = -1.0, x1 = 1.0, y0 = 0.0, y1 = kSqrt3;
    const double dx = (x1 - x0) / w, dy = (y1 - y0) / h;

    std::vector<std::vector<char>> filled(h, std::vector<char>(w, 0));
    std::uint64_t n_in = 0, n_hit = 0;
    for (int j = 0; j < h; ++j) {
        for (int i = 0; i < w; ++i) {
            int in = 0, hit = 0;
            // 2x2 subsamples per pixel
            for (int sj = 0; sj < 2; ++sj) {
                for (int si = 0; si < 2; ++si) {
                    const double x = x0 + (i + 0.25 + 0.5 * si) * dx;
                    const double y = y0 + (j + 0.25 + 0.5 * sj) * dy;
                    if (!inside_model_triangle({x, y}, 0.0)) continue;
                    ++in;
                    if (member(e, x, y)) ++hit;
                }
            }
            n_in += in;
            n_hit += hit;
            if (in > 0 && 2 * hit >= in) filled[j][i] = 1;
        }
    }

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");

    const double px = 800.0 / w; // logical pixel size in SVG units
    char buf[256];
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"%.0f\" "
                  "viewBox=\"0 0 800 %.0f\">\n",
                  800.0 * (y1 - y0) / (x1 - x0), 800.0 * (y1 - y0) / (x1 - x0));
    out << buf;
    out << "<!-- " << event_key(e) << ", resolution " << resolution << " -->\n";
    out << "<g fill=\"#3b76c4\" stroke=\"none\">\n";
    // run-length encode each raster row into one rect per run (y flipped: svg
    // y axis points down)
    for (int j = 0; j < h; ++j) {
        int i = 0;
        while (i < w) {
            if (!filled[j][i]) {
                ++i;
                continue;
            }
            int start = i;
            while (i < w && filled[j][i]) ++i;
            std::snprintf(buf, sizeof buf,
                          "<rect x=\"%.3f\" y=\"%.3f\" width=\"%.3f\" height=\"%.3f\"/>\n",
                          start * px, (h - 1 - j) * px * (y1 - y0) / (x1 - x0) * w / h,
                          (i - start) * px, px * (y1 - y0) / (x1 - x0) * w / h);
            out << buf;
        }
    }
    out << "</g>\n";
    // triangle outline: A(1,0), B(-1,0), C(0,sqrt3) mapped into the viewport
    const double sy = 800.0 * (y1 - y0) / (x1 - x0);
    std::snprintf(buf, sizeof buf,
                  "<polygon points=\"800,%.3f 0,%.3f 400,0\" fill=\"none\" "
                  "stroke=\"#222\" stroke-width=\"2\"/>\n",
                  sy, sy);
    out << buf;
    out << "</svg>\n";
    if (!out) throw std::runtime_error("write error on " + path);

    RegionPlot plot;
    plot.resolution = resolution;
    plot.area_ratio = n_in > 0 ? static_cast<double>(n_hit) / static_cast<double>(n_in) : 0.0;
    return plot;
}

} // namespace brokenstick
