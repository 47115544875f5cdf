#pragma once

#include <string>
#include <vector>

namespace gaborpair {

/// Minimal static line chart: one panel per curve group, solid and dashed
/// polylines. No external plotting dependency.
struct SvgSeries {
    std::vector<double> x;
    std::vector<double> y;
    bool dashed = false;
    std::string color = "#1f3b73";
};

struct SvgPanel {
    std::string title;
    std::vector<SvgSeries> series;
};

std::string render_svg(const std::vector<SvgPanel>& panels, int width = 960,
                       int height = 420);

} // namespace gaborpair
