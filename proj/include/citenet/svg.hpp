#pragma once

#include <string>
#include <vector>

namespace citenet {

struct ChartSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

struct ChartOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_y = false;
};

/// Minimal self-contained SVG line chart (axes, ticks, legend).
std::string render_line_chart(const std::vector<ChartSeries>& series, const ChartOptions& options);

}  // namespace citenet
