#include "citenet/report.hpp"

#include <filesystem>
#include <sstream>

#include "citenet/counts.hpp"
#include "citenet/distributions.hpp"
#include "citenet/error.hpp"
#include "citenet/io.hpp"
#include "citenet/powerlaw.hpp"
#include "citenet/svg.hpp"

namespace citenet {

namespace {

void write_csv(const std::string& dir, const std::string& name, const std::string& content) {
    write_file_atomic((std::filesystem::path(dir) / name).string(), content);
}

std::string fits_csv(const YearSeries& pubs, const YearSeries& journals, int year_step) {
    std::ostringstream out;
    out << "series,model,slope,intercept,r_squared,amplitude,growth_rate,r_squared_log\n";
    auto emit = [&](const std::string& name, const YearSeries& s) {
        YearSeries sampled = s.sampled(year_step);
        if (sampled.size() >= 2) {
            LineFit lf = fit_linear(sampled);
            out << name << ",linear," << format_number(lf.slope) << ','
                << format_number(lf.intercept) << ',' << format_number(lf.r_squared) << ",,,\n";
        }
        YearSeries positive = sampled.positive_only();
        if (positive.size() >= 2) {
            ExpFit ef = fit_exponential(positive);
            out << name << ",exponential,,,," << format_number(ef.amplitude) << ','
                << format_number(ef.growth_rate) << ',' << format_number(ef.r_squared_log) << '\n';
        }
    };
    emit("publications", pubs);
    emit("journals", journals);
    return out.str();
}

std::string peaks_csv(const std::vector<std::pair<int, PeakStats>>& rows,
                      const std::string& kind) {
    std::ostringstream out;
    out << "cohort_year,kind,peak_year,peak_value,peak_delta\n";
    for (const auto& [cohort, p] : rows)
        out << cohort << ',' << kind << ',' << p.peak_year << ',' << format_number(p.peak_value)
            << ',' << p.peak_delta << '\n';
    return out.str();
}

std::vector<ChartSeries> distribution_chart(const std::vector<CohortDistribution>& dists) {
    std::vector<ChartSeries> chart;
    for (const CohortDistribution& d : dists) {
        ChartSeries s;
        s.label = std::to_string(d.cohort_year);
        for (std::size_t i = 0; i < d.size(); ++i)
            s.points.emplace_back(d.support[i], d.probability[i]);
        chart.push_back(std::move(s));
    }
    return chart;
}

}  // namespace

void run_report(const Corpus& corpus, const std::string& out_dir, const ReportOptions& opt) {
    if (corpus.empty()) throw_domain("report: empty corpus");
    if (opt.cohort_step < 1) throw_domain("report: cohort_step must be >= 1");
    std::filesystem::create_directories(out_dir);

    // Figure 1: growth of output and venues.
    YearSeries pubs = publication_counts(corpus);
    YearSeries journals = journal_counts(corpus);
    write_csv(out_dir, "publications.csv", pubs.to_csv());
    write_csv(out_dir, "journals.csv", journals.to_csv());
    write_csv(out_dir, "growth_fits.csv", fits_csv(pubs, journals, opt.fit_year_step));

    // Cohort selection for the distribution figures.
    int first = corpus.year_min(), last = corpus.year_max();
    if (!opt.include_edge_cohorts) {
        ++first;
        --last;
    }
    std::vector<int> cohorts;
    for (int y = first; y <= last; y += opt.cohort_step) cohorts.push_back(y);

    CitationMatrix matrix = citation_counts_matrix(corpus);

    struct DistSet {
        std::vector<CohortDistribution> plain, aligned;
        std::vector<std::pair<int, PeakStats>> peaks;
    };
    auto collect = [&](DistributionKind kind) {
        DistSet set;
        for (int y : cohorts) {
            try {
                CohortDistribution d;
                switch (kind) {
                    case DistributionKind::citation: d = citation_distribution(matrix, y); break;
                    case DistributionKind::normalized_citation:
                        d = normalized_citation_distribution(matrix, pubs, y);
                        break;
                    case DistributionKind::reference: d = reference_distribution(matrix, y); break;
                }
                set.peaks.emplace_back(y, peak_stats(d, y));
                set.aligned.push_back(align_to_peak(d));
                set.plain.push_back(std::move(d));
            } catch (const Error&) {
                // cohorts without data are simply not reported
            }
        }
        return set;
    };

    auto emit_set = [&](const DistSet& set, const std::string& stem, const std::string& kind) {
        std::ostringstream plain, aligned;
        write_distributions_csv(set.plain, plain);
        write_distributions_csv(set.aligned, aligned);
        write_csv(out_dir, stem + ".csv", plain.str());
        write_csv(out_dir, stem + "_aligned.csv", aligned.str());
        write_csv(out_dir, stem + "_peaks.csv", peaks_csv(set.peaks, kind));
    };

    // Figures 2-4.
    DistSet refs = collect(DistributionKind::reference);
    DistSet cites = collect(DistributionKind::citation);
    DistSet cites_norm = collect(DistributionKind::normalized_citation);
    emit_set(refs, "references", "reference");
    emit_set(cites, "citations", "citation");
    emit_set(cites_norm, "citations_normalized", "normalized_citation");

    // Figure 5: exponent sweeps and their trend lines.
    std::vector<int> centers;
    if (opt.centers.has_value()) {
        centers = *opt.centers;
    } else {
        for (int c = corpus.year_min() + opt.half_width; c + opt.half_width <= corpus.year_max();
             ++c)
            centers.push_back(c);
    }
    std::ostringstream slopes;
    slopes << "mode,slope,intercept,r_squared,n_centers\n";
    std::vector<ExponentSeries> sweeps;
    auto sweep_out = [&](DegreeMode mode, const std::string& name,
                         const std::optional<double>& k_min) {
        if (centers.empty()) return;
        ExponentSeries sweep = exponent_sweep(corpus, centers, opt.half_width, mode, k_min);
        std::ostringstream csv;
        sweep.write_csv(csv);
        write_csv(out_dir, name, csv.str());
        if (sweep.fits.size() >= 2) {
            LineFit lf = fit_linear(sweep.alpha_series());
            slopes << to_string(mode) << ',' << format_number(lf.slope) << ','
                   << format_number(lf.intercept) << ',' << format_number(lf.r_squared) << ','
                   << sweep.fits.size() << '\n';
        }
        sweeps.push_back(std::move(sweep));
    };
    sweep_out(DegreeMode::raw, "exponents_raw.csv", opt.k_min_raw);
    sweep_out(DegreeMode::normalized, "exponents_normalized.csv", opt.k_min_normalized);
    write_csv(out_dir, "exponent_slopes.csv", slopes.str());

    if (opt.emit_svg) {
        auto chart = [&](const std::string& name, const std::vector<ChartSeries>& series,
                         ChartOptions o) { write_csv(out_dir, name, render_line_chart(series, o)); };
        std::vector<ChartSeries> growth{{"publications", {}}, {"journals", {}}};
        for (const auto& [y, v] : pubs.points()) growth[0].points.emplace_back(y, v);
        for (const auto& [y, v] : journals.points()) growth[1].points.emplace_back(y, v);
        chart("growth.svg", growth, {"Publication and journal counts", "year", "count", true});
        chart("references.svg", distribution_chart(refs.plain),
              {"Reference distributions", "cited year", "probability", false});
        chart("citations.svg", distribution_chart(cites.plain),
              {"Citation distributions", "citing year", "probability", false});
        chart("citations_normalized.svg", distribution_chart(cites_norm.plain),
              {"Normalized citation distributions", "citing year", "probability", false});

        std::vector<ChartSeries> exps;
        for (const ExponentSeries& sweep : sweeps) {
            ChartSeries s;
            s.label = std::string(to_string(sweep.mode));
            for (const auto& [c, fit] : sweep.fits) s.points.emplace_back(c, fit.alpha);
            exps.push_back(std::move(s));
        }
        chart("exponents.svg", exps, {"Power-law exponents", "window center", "alpha", false});
    }
}

}  // namespace citenet
