#include "gaborpair/svg.hpp"

#include <algorithm>
#include <cmath>

#include "gaborpair/csv.hpp"

namespace gaborpair {

namespace {

void minmax(const std::vector<double>& v, double& lo, double& hi) {
    for (double x : v) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
}

} // namespace

std::string render_svg(const std::vector<SvgPanel>& panels, int width, int height) {
    const int n = static_cast<int>(panels.size());
    const double pw = static_cast<double>(width) / std::max(1, n);
    const double margin = 42.0;

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(width) + "\" height=\"" + std::to_string(height) +
                      "\" viewBox=\"0 0 " + std::to_string(width) + " " +
                      std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (int p = 0; p < n; ++p) {
        const SvgPanel& panel = panels[static_cast<size_t>(p)];
        double x_lo = 1e300, x_hi = -1e300, y_lo = 1e300, y_hi = -1e300;
        for (const auto& s : panel.series) {
            minmax(s.x, x_lo, x_hi);
            minmax(s.y, y_lo, y_hi);
        }
        if (!(x_lo < x_hi)) { x_lo = 0; x_hi = 1; }
        if (!(y_lo < y_hi)) { y_lo = -1; y_hi = 1; }
        const double pad = 0.05 * (y_hi - y_lo);
        y_lo -= pad;
        y_hi += pad;

        const double left = p * pw + margin;
        const double right = (p + 1) * pw - 12.0;
        const double top = 30.0;
        const double bottom = height - margin;
        const auto px = [&](double x) {
            return left + (x - x_lo) / (x_hi - x_lo) * (right - left);
        };
        const auto py = [&](double y) {
            return bottom - (y - y_lo) / (y_hi - y_lo) * (bottom - top);
        };

        svg += "<rect x=\"" + format_double(left) + "\" y=\"" + format_double(top) +
               "\" width=\"" + format_double(right - left) + "\" height=\"" +
               format_double(bottom - top) + "\" fill=\"none\" stroke=\"#888\"/>\n";
        if (y_lo < 0 && y_hi > 0) {
            svg += "<line x1=\"" + format_double(left) + "\" y1=\"" + format_double(py(0)) +
                   "\" x2=\"" + format_double(right) + "\" y2=\"" + format_double(py(0)) +
                   "\" stroke=\"#ccc\"/>\n";
        }
        svg += "<text x=\"" + format_double(0.5 * (left + right)) +
               "\" y=\"20\" font-size=\"14\" text-anchor=\"middle\" "
               "font-family=\"sans-serif\">" +
               panel.title + "</text>\n";

        for (const auto& s : panel.series) {
            std::string pts;
            const size_t m = std::min(s.x.size(), s.y.size());
            for (size_t i = 0; i < m; ++i) {
                pts += format_double(px(s.x[i]));
                pts += ',';
                pts += format_double(py(s.y[i]));
                if (i + 1 < m) pts += ' ';
            }
            svg += "<polyline fill=\"none\" stroke=\"" + s.color + "\" stroke-width=\"1.2\"";
            if (s.dashed) svg += " stroke-dasharray=\"5,4\"";
            svg += " points=\"" + pts + "\"/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace gaborpair
