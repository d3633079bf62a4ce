#include "citenet/counts.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include "citenet/error.hpp"
#include "citenet/io.hpp"

namespace citenet {

YearSeries::YearSeries(std::vector<std::pair<int, double>> points) : points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i > 0 && points_[i].first <= points_[i - 1].first)
            throw_domain("YearSeries years must be strictly increasing");
        if (points_[i].second < 0.0 || !std::isfinite(points_[i].second))
            throw_domain("YearSeries values must be finite and non-negative");
    }
}

std::optional<double> YearSeries::at(int year) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), year,
                               [](const auto& p, int y) { return p.first < y; });
    if (it == points_.end() || it->first != year) return std::nullopt;
    return it->second;
}

YearSeries YearSeries::sampled(int step) const {
    if (step < 1) throw_domain("sampling step must be >= 1");
    if (step == 1) return *this;
    std::vector<std::pair<int, double>> pts;
    for (const auto& p : points_)
        if ((p.first - points_.front().first) % step == 0) pts.push_back(p);
    return YearSeries(std::move(pts));
}

YearSeries YearSeries::positive_only() const {
    std::vector<std::pair<int, double>> pts;
    for (const auto& p : points_)
        if (p.second > 0.0) pts.push_back(p);
    return YearSeries(std::move(pts));
}

void YearSeries::write_csv(std::ostream& out) const {
    out << "year,count\n";
    for (const auto& [year, value] : points_)
        out << year << ',' << format_number(value) << '\n';
}

std::string YearSeries::to_csv() const {
    std::ostringstream ss;
    write_csv(ss);
    return ss.str();
}

YearSeries publication_counts(const Corpus& corpus) {
    if (corpus.empty()) throw_domain("publication_counts: empty corpus");
    std::vector<std::pair<int, double>> pts;
    for (int y = corpus.year_min(); y <= corpus.year_max(); ++y)
        pts.emplace_back(y, static_cast<double>(corpus.papers_in_year(y).size()));
    return YearSeries(std::move(pts));
}

YearSeries journal_counts(const Corpus& corpus) {
    if (corpus.empty()) throw_domain("journal_counts: empty corpus");
    std::vector<std::pair<int, double>> pts;
    std::unordered_set<std::string_view> venues;
    for (int y = corpus.year_min(); y <= corpus.year_max(); ++y) {
        venues.clear();
        for (std::uint32_t idx : corpus.papers_in_year(y)) venues.insert(corpus.paper(idx).venue);
        pts.emplace_back(y, static_cast<double>(venues.size()));
    }
    return YearSeries(std::move(pts));
}

namespace {

// Centered least squares of y on x; returns slope, intercept (at x=0), R^2.
LineFit ols(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double pred = fit.slope * xs[i] + fit.intercept;
        ss_res += (ys[i] - pred) * (ys[i] - pred);
        ss_tot += (ys[i] - my) * (ys[i] - my);
    }
    fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    fit.r_squared = std::clamp(fit.r_squared, 0.0, 1.0);
    return fit;
}

}  // namespace

LineFit fit_linear(const YearSeries& series) {
    if (series.size() < 2) throw_domain("fit_linear: need at least 2 points");
    std::vector<double> xs, ys;
    xs.reserve(series.size());
    ys.reserve(series.size());
    for (const auto& [year, value] : series.points()) {
        xs.push_back(static_cast<double>(year));
        ys.push_back(value);
    }
    return ols(xs, ys);
}

ExpFit fit_exponential(const YearSeries& series) {
    if (series.size() < 2) throw_domain("fit_exponential: need at least 2 points");
    std::vector<double> xs, ys;
    xs.reserve(series.size());
    ys.reserve(series.size());
    for (const auto& [year, value] : series.points()) {
        if (value <= 0.0)
            throw_domain("fit_exponential: non-positive count at year " + std::to_string(year));
        xs.push_back(static_cast<double>(year));
        ys.push_back(std::log(value));
    }
    LineFit log_fit = ols(xs, ys);
    ExpFit fit;
    fit.growth_rate = std::exp(log_fit.slope);
    fit.amplitude = std::exp(log_fit.intercept + log_fit.slope * xs.front());
    fit.r_squared_log = log_fit.r_squared;
    return fit;
}

}  // namespace citenet
