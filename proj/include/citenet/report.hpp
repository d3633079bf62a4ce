#pragma once

#include <optional>
#include <string>
#include <vector>

#include "citenet/corpus.hpp"

namespace citenet {

struct ReportOptions {
    /// Distance between sampled cohort years for the distribution figures.
    int cohort_step = 5;
    /// The first and last corpus years see truncated reference/citation
    /// windows; they are skipped by default.
    bool include_edge_cohorts = false;
    int half_width = 5;
    std::optional<double> k_min_raw;         // default 1
    std::optional<double> k_min_normalized;  // default: per-window smallest positive
    /// Use every Nth year when fitting the growth curves (1 = all years).
    int fit_year_step = 1;
    /// Window centers for the exponent sweeps; default: every center whose
    /// window lies fully inside the corpus year range.
    std::optional<std::vector<int>> centers;
    bool emit_svg = false;
};

/// Runs the whole pipeline -- growth counts and fits, reference
/// distributions, citation distributions (raw and normalized), peak tables,
/// and the exponent sweeps -- writing one CSV data set per figure (plus SVG
/// charts on request) into `out_dir`.
void run_report(const Corpus& corpus, const std::string& out_dir, const ReportOptions& options);

}  // namespace citenet
