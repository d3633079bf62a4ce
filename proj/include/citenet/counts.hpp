#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "citenet/corpus.hpp"

namespace citenet {

/// Ordered year -> value map with strictly increasing years and
/// non-negative values.
class YearSeries {
public:
    YearSeries() = default;
    /// `points` must be sorted by year with unique years and values >= 0.
    explicit YearSeries(std::vector<std::pair<int, double>> points);

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    int year(std::size_t i) const { return points_[i].first; }
    double value(std::size_t i) const { return points_[i].second; }
    int first_year() const { return points_.front().first; }
    int last_year() const { return points_.back().first; }
    std::optional<double> at(int year) const;

    const std::vector<std::pair<int, double>>& points() const { return points_; }

    /// Keeps every `step`-th year starting from the first (step 1 = all).
    YearSeries sampled(int step) const;
    /// Restricts to years whose value is positive.
    YearSeries positive_only() const;

    /// CSV with header: year,count
    void write_csv(std::ostream& out) const;
    std::string to_csv() const;

private:
    std::vector<std::pair<int, double>> points_;
};

struct LineFit {
    double slope = 0.0;       // per year
    double intercept = 0.0;   // value at year 0
    double r_squared = 1.0;
};

struct ExpFit {
    double amplitude = 0.0;      // fitted value at the series' first year
    double growth_rate = 0.0;    // per-year multiplier
    double r_squared_log = 1.0;  // R^2 of the log-space fit
};

/// Papers per year over the full corpus year range, zero years included.
YearSeries publication_counts(const Corpus& corpus);

/// Distinct venues with at least one paper, per year over the same range.
YearSeries journal_counts(const Corpus& corpus);

/// Ordinary least squares of value on year. R^2 = 1 - SSres/SStot, defined
/// as 1 for a constant series. Requires >= 2 points.
LineFit fit_linear(const YearSeries& series);

/// Least squares of ln(value) on year; growth_rate = exp(slope). Requires
/// >= 2 points, all values > 0.
ExpFit fit_exponential(const YearSeries& series);

}  // namespace citenet
