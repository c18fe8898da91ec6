#pragma once

#include <string>
#include <vector>

namespace qwalk {

struct PlotSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<PlotSeries> series;
    // Draw each point as a vertical line from y = 0 (for distributions).
    bool stems = false;
};

/// Self-contained SVG line plot. Output depends only on the input values.
std::string render_svg(const PlotSpec& spec);

} // namespace qwalk
