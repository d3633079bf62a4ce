#include "citenet/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace citenet {

namespace {

constexpr double kWidth = 800, kHeight = 500;
constexpr double kLeft = 70, kRight = 160, kTop = 40, kBottom = 50;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string render_line_chart(const std::vector<ChartSeries>& series, const ChartOptions& opt) {
    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = x_min, y_max = -x_min;
    for (const ChartSeries& s : series) {
        for (auto [x, y] : s.points) {
            if (opt.log_y && y <= 0.0) continue;
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            double yv = opt.log_y ? std::log10(y) : y;
            y_min = std::min(y_min, yv);
            y_max = std::max(y_max, yv);
        }
    }
    if (!(x_min <= x_max)) {  // nothing plottable
        x_min = 0, x_max = 1, y_min = 0, y_max = 1;
    }
    if (x_min == x_max) {
        x_min -= 0.5;
        x_max += 0.5;
    }
    if (y_min == y_max) {
        y_min -= 0.5;
        y_max += 0.5;
    }

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double y) {
        double yv = opt.log_y ? std::log10(y) : y;
        return kTop + (1.0 - (yv - y_min) / (y_max - y_min)) * plot_h;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
        << "font-family=\"sans-serif\">" << opt.title << "</text>\n";

    // frame
    svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\""
        << plot_h << "\" fill=\"none\" stroke=\"#333\"/>\n";

    // ticks
    const int n_ticks = 6;
    for (int i = 0; i <= n_ticks; ++i) {
        double fx = x_min + (x_max - x_min) * i / n_ticks;
        double gx = px(fx);
        svg << "<line x1=\"" << gx << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << gx << "\" y2=\""
            << kTop + plot_h + 5 << "\" stroke=\"#333\"/>\n";
        svg << "<text x=\"" << gx << "\" y=\"" << kTop + plot_h + 20
            << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">" << fmt(fx)
            << "</text>\n";

        double fy = y_min + (y_max - y_min) * i / n_ticks;
        double gy = kTop + plot_h - plot_h * i / n_ticks;
        double label = opt.log_y ? std::pow(10.0, fy) : fy;
        svg << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << gy << "\" x2=\"" << kLeft << "\" y2=\""
            << gy << "\" stroke=\"#333\"/>\n";
        svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << gy + 4
            << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">" << fmt(label)
            << "</text>\n";
    }
    svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 8
        << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" << opt.x_label
        << "</text>\n";
    svg << "<text x=\"16\" y=\"" << kTop + plot_h / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" "
        << "transform=\"rotate(-90 16 " << kTop + plot_h / 2 << ")\">" << opt.y_label
        << "</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = kPalette[i % std::size(kPalette)];
        std::ostringstream pts;
        for (auto [x, y] : series[i].points) {
            if (opt.log_y && y <= 0.0) continue;
            pts << fmt(px(x)) << ',' << fmt(py(y)) << ' ';
        }
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\""
            << pts.str() << "\"/>\n";
        double ly = kTop + 14 + 16 * static_cast<double>(i);
        svg << "<line x1=\"" << kWidth - kRight + 10 << "\" y1=\"" << ly << "\" x2=\""
            << kWidth - kRight + 30 << "\" y2=\"" << ly << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << kWidth - kRight + 35 << "\" y=\"" << ly + 4
            << "\" font-size=\"11\" font-family=\"sans-serif\">" << series[i].label << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace citenet
