// citenet command-line front end. Exit codes: 0 success, 1 usage error,
// 2 data error. Everything analytical runs behind the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "citenet.h"

namespace {

struct CorpusDeleter {
    void operator()(cn_corpus* c) const { cn_corpus_free(c); }
};
struct SeriesDeleter {
    void operator()(cn_year_series* s) const { cn_year_series_free(s); }
};
struct MatrixDeleter {
    void operator()(cn_matrix* m) const { cn_matrix_free(m); }
};
struct DistDeleter {
    void operator()(cn_distribution* d) const { cn_distribution_free(d); }
};
struct SampleDeleter {
    void operator()(cn_sample* s) const { cn_sample_free(s); }
};
struct SweepDeleter {
    void operator()(cn_exponent_series* s) const { cn_exponent_series_free(s); }
};

using CorpusPtr = std::unique_ptr<cn_corpus, CorpusDeleter>;
using SeriesPtr = std::unique_ptr<cn_year_series, SeriesDeleter>;
using MatrixPtr = std::unique_ptr<cn_matrix, MatrixDeleter>;
using DistPtr = std::unique_ptr<cn_distribution, DistDeleter>;
using SamplePtr = std::unique_ptr<cn_sample, SampleDeleter>;
using SweepPtr = std::unique_ptr<cn_exponent_series, SweepDeleter>;

// data errors exit with 2
struct DataError {
    std::string message;
};

void require_ok(cn_status status, const std::string& context) {
    if (status != CN_OK) throw DataError{context + ": " + cn_last_error()};
}

CorpusPtr load_corpus_or_die(const std::string& papers, const std::string& citations,
                             cn_validation_report* report) {
    cn_corpus* corpus = nullptr;
    require_ok(cn_load_corpus(papers.c_str(), citations.c_str(), nullptr, &corpus, report),
               "loading corpus");
    return CorpusPtr(corpus);
}

void print_report(const cn_validation_report& r, std::ostream& out) {
    out << "papers retained:        " << r.paper_count << " (of " << r.input_paper_count << ")\n"
        << "edges retained:         " << r.edge_count << " (of " << r.input_edge_count << ")\n"
        << "dropped papers:         doc_type " << r.dropped_papers_doc_type << ", year_range "
        << r.dropped_papers_year_range << ", duplicate " << r.dropped_papers_duplicate << "\n"
        << "dropped edges:          dangling " << r.dropped_edges_dangling << ", duplicate "
        << r.dropped_edges_duplicate << ", self_citation " << r.dropped_edges_self_citation
        << "\n"
        << "pre-publication edges:  " << r.pre_publication_edge_count << "\n";
}

std::string report_csv(const cn_validation_report& r) {
    std::ostringstream out;
    out << "field,value\n"
        << "paper_count," << r.paper_count << "\n"
        << "edge_count," << r.edge_count << "\n"
        << "input_paper_count," << r.input_paper_count << "\n"
        << "input_edge_count," << r.input_edge_count << "\n"
        << "dropped_papers_doc_type," << r.dropped_papers_doc_type << "\n"
        << "dropped_papers_year_range," << r.dropped_papers_year_range << "\n"
        << "dropped_papers_duplicate," << r.dropped_papers_duplicate << "\n"
        << "dropped_edges_dangling," << r.dropped_edges_dangling << "\n"
        << "dropped_edges_duplicate," << r.dropped_edges_duplicate << "\n"
        << "dropped_edges_self_citation," << r.dropped_edges_self_citation << "\n"
        << "pre_publication_edge_count," << r.pre_publication_edge_count << "\n";
    return out.str();
}

// cohort list helper: explicit years, or all years with data in [min, max]
std::vector<int> cohort_years(const cn_corpus* corpus, const std::vector<int>& requested) {
    if (!requested.empty()) return requested;
    std::vector<int> all;
    for (int y = cn_corpus_year_min(corpus); y <= cn_corpus_year_max(corpus); ++y)
        all.push_back(y);
    return all;
}

DistPtr make_distribution(const cn_matrix* matrix, const cn_year_series* pubs, int year,
                          cn_distribution_kind kind, bool align, cn_status* status) {
    cn_distribution* dist = nullptr;
    switch (kind) {
        case CN_DIST_CITATION: *status = cn_citation_distribution(matrix, year, &dist); break;
        case CN_DIST_NORMALIZED_CITATION:
            *status = cn_normalized_citation_distribution(matrix, pubs, year, &dist);
            break;
        case CN_DIST_REFERENCE: *status = cn_reference_distribution(matrix, year, &dist); break;
    }
    DistPtr out(dist);
    if (*status == CN_OK && align) {
        cn_distribution* aligned = nullptr;
        *status = cn_align_to_peak(out.get(), &aligned);
        if (*status == CN_OK) out.reset(aligned);
    }
    return out;
}

int run_distribution_command(const std::string& papers, const std::string& citations,
                             cn_distribution_kind kind, bool align,
                             const std::vector<int>& cohorts_arg, const std::string& out_path) {
    CorpusPtr corpus = load_corpus_or_die(papers, citations, nullptr);
    cn_matrix* matrix_raw = nullptr;
    require_ok(cn_citation_matrix(corpus.get(), &matrix_raw), "building citation matrix");
    MatrixPtr matrix(matrix_raw);
    SeriesPtr pubs;
    if (kind == CN_DIST_NORMALIZED_CITATION) {
        cn_year_series* p = nullptr;
        require_ok(cn_publication_counts(corpus.get(), &p), "publication counts");
        pubs.reset(p);
    }

    std::vector<DistPtr> dists;
    for (int y : cohort_years(corpus.get(), cohorts_arg)) {
        cn_status status = CN_OK;
        DistPtr d = make_distribution(matrix.get(), pubs.get(), y, kind, align, &status);
        if (status == CN_OK)
            dists.push_back(std::move(d));
        else if (status != CN_ERROR_DOMAIN || !cohorts_arg.empty())
            throw DataError{"cohort " + std::to_string(y) + ": " + cn_last_error()};
        // cohorts without data are skipped when sweeping the whole range
    }
    std::vector<const cn_distribution*> raw;
    raw.reserve(dists.size());
    for (const auto& d : dists) raw.push_back(d.get());
    if (!out_path.empty()) {
        require_ok(cn_distributions_write_csv(raw.data(), raw.size(), out_path.c_str()),
                   "writing CSV");
    } else {
        // stdout: same layout the CSV writer produces
        bool aligned = !raw.empty() && cn_distribution_is_aligned(raw.front());
        std::cout << (aligned ? "cohort_year,kind,offset,probability\n"
                              : "cohort_year,kind,x,probability\n");
        const char* kind_names[] = {"citation", "normalized_citation", "reference"};
        for (const auto& d : dists) {
            for (size_t i = 0; i < cn_distribution_size(d.get()); ++i) {
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%.12g", cn_distribution_p(d.get(), i));
                std::cout << cn_distribution_cohort_year(d.get()) << ','
                          << kind_names[cn_distribution_get_kind(d.get())] << ','
                          << cn_distribution_x(d.get(), i) << ',' << buf << '\n';
            }
        }
    }
    return 0;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError{"cannot open " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// temp file + rename, so partially written outputs are never observed
void write_text_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << content;
        if (!out) throw DataError{"cannot write " + tmp};
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw DataError{"cannot rename onto " + path};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"citation-network analytics toolkit"};
    app.require_subcommand(1);

    std::string papers_path, citations_path, out_path, out_dir, config_path;
    std::vector<int> cohorts, centers;
    bool normalized = false, align = false, emit_svg = false, include_edge_cohorts = false;
    int years_step = 1, half_width = 5, cohort_step = 5;
    double k_min = 0.0;
    long long seed_override = -1;

    auto add_corpus_inputs = [&](CLI::App* cmd) {
        cmd->add_option("--papers", papers_path, "papers file (TSV)")->required();
        cmd->add_option("--citations", citations_path, "citations file (TSV)")->required();
    };

    auto* validate = app.add_subcommand("validate", "load a corpus and report diagnostics");
    add_corpus_inputs(validate);
    validate->add_option("--out", out_path, "also write the report as CSV");

    auto* counts = app.add_subcommand("counts", "publication/journal counts with growth fits");
    add_corpus_inputs(counts);
    counts->add_option("--out", out_dir, "output directory")->required();
    counts->add_option("--years", years_step, "fit every Nth year (default all)")
        ->check(CLI::PositiveNumber);

    auto* refdist = app.add_subcommand("refdist", "per-cohort reference distributions");
    add_corpus_inputs(refdist);
    refdist->add_option("--cohorts", cohorts, "cohort years (default: all with data)");
    refdist->add_flag("--align", align, "shift each distribution's peak to offset 0");
    refdist->add_option("--out", out_path, "output CSV (default stdout)");

    auto* citedist = app.add_subcommand("citedist", "per-cohort citation distributions");
    add_corpus_inputs(citedist);
    citedist->add_option("--cohorts", cohorts, "cohort years (default: all with data)");
    citedist->add_flag("--normalized", normalized, "divide by citing-year publication counts");
    citedist->add_flag("--align", align, "shift each distribution's peak to offset 0");
    citedist->add_option("--out", out_path, "output CSV (default stdout)");

    auto* peaks = app.add_subcommand("peaks", "peak-year statistics per cohort");
    add_corpus_inputs(peaks);
    std::string peaks_kind = "reference";
    peaks->add_option("--kind", peaks_kind, "reference | citation | normalized")
        ->check(CLI::IsMember({"reference", "citation", "normalized"}));
    peaks->add_option("--cohorts", cohorts, "cohort years (default: all with data)");
    peaks->add_option("--out", out_path, "output CSV (default stdout)");

    auto* powerlaw = app.add_subcommand("powerlaw", "windowed power-law exponent sweep");
    add_corpus_inputs(powerlaw);
    std::string mode = "raw";
    powerlaw->add_option("--centers", centers, "window center years")->required();
    powerlaw->add_option("--half-width", half_width, "window half width (default 5)");
    powerlaw->add_option("--mode", mode, "raw | normalized")
        ->check(CLI::IsMember({"raw", "normalized"}));
    powerlaw->add_option("--kmin", k_min, "tail cutoff (default: 1 raw, per-window normalized)");
    powerlaw->add_option("--out", out_path, "output CSV (default stdout)");

    auto* synth = app.add_subcommand("synth", "generate a synthetic corpus");
    synth->add_option("--config", config_path, "generator config (JSON)")->required();
    synth->add_option("--out", out_dir, "output directory")->required();
    synth->add_option("--seed", seed_override, "override the config seed");

    auto* report = app.add_subcommand("report", "full pipeline into one output directory");
    add_corpus_inputs(report);
    report->add_option("--out", out_dir, "output directory")->required();
    report->add_flag("--svg", emit_svg, "also draw SVG line charts");
    report->add_option("--cohort-step", cohort_step, "cohort sampling step (default 5)");
    report->add_flag("--include-edge-cohorts", include_edge_cohorts,
                     "keep the first/last corpus years in the distribution figures");
    report->add_option("--half-width", half_width, "sweep window half width (default 5)");
    report->add_option("--kmin", k_min, "tail cutoff for the raw sweep");
    report->add_option("--years", years_step, "fit every Nth year in the growth fits")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 1;
    }

    try {
        if (validate->parsed()) {
            cn_validation_report r{};
            CorpusPtr corpus = load_corpus_or_die(papers_path, citations_path, &r);
            print_report(r, std::cout);
            if (!out_path.empty()) write_text_atomic(out_path, report_csv(r));
        } else if (counts->parsed()) {
            CorpusPtr corpus = load_corpus_or_die(papers_path, citations_path, nullptr);
            cn_year_series *pubs = nullptr, *journals = nullptr;
            require_ok(cn_publication_counts(corpus.get(), &pubs), "publication counts");
            SeriesPtr pubs_owned(pubs);
            require_ok(cn_journal_counts(corpus.get(), &journals), "journal counts");
            SeriesPtr journals_owned(journals);
            require_ok(cn_year_series_write_csv(pubs, (out_dir + "/publications.csv").c_str()),
                       "writing publications.csv");
            require_ok(cn_year_series_write_csv(journals, (out_dir + "/journals.csv").c_str()),
                       "writing journals.csv");
            for (auto [name, series] :
                 {std::pair{"publications", pubs}, std::pair{"journals", journals}}) {
                cn_year_series* sampled = nullptr;
                require_ok(cn_year_series_sample(series, years_step, &sampled), "sampling");
                SeriesPtr sampled_owned(sampled);
                cn_line_fit lf{};
                if (cn_fit_linear(sampled, &lf) == CN_OK)
                    std::printf("%s linear: slope %.6g/year, intercept %.6g, r^2 %.4f\n", name,
                                lf.slope, lf.intercept, lf.r_squared);
                cn_year_series* positive = nullptr;
                require_ok(cn_year_series_positive(sampled, &positive), "filtering zeros");
                SeriesPtr positive_owned(positive);
                cn_exp_fit ef{};
                if (cn_year_series_size(positive) >= 2 &&
                    cn_fit_exponential(positive, &ef) == CN_OK)
                    std::printf("%s exponential: amplitude %.6g, growth %.6g/year, r^2(log) %.4f\n",
                                name, ef.amplitude, ef.growth_rate, ef.r_squared_log);
            }
        } else if (refdist->parsed()) {
            return run_distribution_command(papers_path, citations_path, CN_DIST_REFERENCE, align,
                                            cohorts, out_path);
        } else if (citedist->parsed()) {
            return run_distribution_command(papers_path, citations_path,
                                            normalized ? CN_DIST_NORMALIZED_CITATION
                                                       : CN_DIST_CITATION,
                                            align, cohorts, out_path);
        } else if (peaks->parsed()) {
            CorpusPtr corpus = load_corpus_or_die(papers_path, citations_path, nullptr);
            cn_matrix* matrix_raw = nullptr;
            require_ok(cn_citation_matrix(corpus.get(), &matrix_raw), "building citation matrix");
            MatrixPtr matrix(matrix_raw);
            SeriesPtr pubs;
            cn_distribution_kind kind = CN_DIST_REFERENCE;
            if (peaks_kind == "citation") kind = CN_DIST_CITATION;
            if (peaks_kind == "normalized") {
                kind = CN_DIST_NORMALIZED_CITATION;
                cn_year_series* p = nullptr;
                require_ok(cn_publication_counts(corpus.get(), &p), "publication counts");
                pubs.reset(p);
            }
            std::ostringstream table;
            table << "cohort_year,kind,peak_year,peak_value,peak_delta\n";
            for (int y : cohort_years(corpus.get(), cohorts)) {
                cn_status status = CN_OK;
                DistPtr d = make_distribution(matrix.get(), pubs.get(), y, kind, false, &status);
                if (status == CN_ERROR_DOMAIN && cohorts.empty()) continue;
                if (status != CN_OK)
                    throw DataError{"cohort " + std::to_string(y) + ": " + cn_last_error()};
                cn_peak_stats p{};
                require_ok(cn_peak_stats_of(d.get(), y, &p), "peak stats");
                char buf[64];
                std::snprintf(buf, sizeof(buf), "%.12g", p.peak_value);
                table << y << ',' << peaks_kind << ',' << p.peak_year << ',' << buf << ','
                      << p.peak_delta << '\n';
            }
            if (out_path.empty())
                std::cout << table.str();
            else
                write_text_atomic(out_path, table.str());
        } else if (powerlaw->parsed()) {
            CorpusPtr corpus = load_corpus_or_die(papers_path, citations_path, nullptr);
            cn_exponent_series* sweep_raw = nullptr;
            require_ok(cn_exponent_sweep(corpus.get(), centers.data(), centers.size(), half_width,
                                         mode == "raw" ? CN_DEGREE_RAW : CN_DEGREE_NORMALIZED,
                                         k_min, &sweep_raw),
                       "exponent sweep");
            SweepPtr sweep(sweep_raw);
            if (!out_path.empty()) {
                require_ok(cn_exponent_series_write_csv(sweep.get(), out_path.c_str()),
                           "writing CSV");
            } else {
                std::cout << "center_year,mode,alpha,k_min,n_tail,converged\n";
                for (size_t i = 0; i < cn_exponent_series_size(sweep.get()); ++i) {
                    cn_power_law_fit f{};
                    cn_exponent_series_fit(sweep.get(), i, &f);
                    char a[64], k[64];
                    std::snprintf(a, sizeof(a), "%.12g", f.alpha);
                    std::snprintf(k, sizeof(k), "%.12g", f.k_min);
                    std::cout << cn_exponent_series_center(sweep.get(), i) << ',' << mode << ','
                              << a << ',' << k << ',' << f.n_tail << ','
                              << (f.converged ? "true" : "false") << '\n';
                }
            }
            for (size_t i = 0; i < cn_exponent_series_absent_count(sweep.get()); ++i)
                std::cerr << "center " << cn_exponent_series_absent_center(sweep.get(), i)
                          << " absent: " << cn_exponent_series_absent_reason(sweep.get(), i)
                          << '\n';
            cn_line_fit trend{};
            if (cn_exponent_series_trend(sweep.get(), &trend) == CN_OK)
                std::fprintf(stderr, "alpha trend: slope %+.6g/year (r^2 %.4f)\n", trend.slope,
                             trend.r_squared);
        } else if (synth->parsed()) {
            std::string config_text = read_text_file(config_path);
            cn_corpus* corpus_raw = nullptr;
            cn_gen_stats stats{};
            require_ok(cn_generate_corpus(config_text.c_str(), seed_override, &corpus_raw, &stats),
                       "generating corpus");
            CorpusPtr corpus(corpus_raw);
            require_ok(cn_corpus_write(corpus.get(), (out_dir + "/papers.tsv").c_str(),
                                       (out_dir + "/citations.tsv").c_str()),
                       "writing corpus");
            char* canonical = nullptr;
            require_ok(cn_synth_config_canonical(config_text.c_str(), seed_override, &canonical),
                       "canonical config");
            std::string canonical_text(canonical);
            cn_string_free(canonical);
            write_text_atomic(out_dir + "/config.json", canonical_text);
            std::printf("papers %llu, refs requested %llu, edges %llu, dropped %llu dup / %llu self\n",
                        (unsigned long long)stats.papers_created,
                        (unsigned long long)stats.refs_requested,
                        (unsigned long long)stats.edges_created,
                        (unsigned long long)stats.dropped_duplicate_target,
                        (unsigned long long)stats.dropped_self_target);
        } else if (report->parsed()) {
            CorpusPtr corpus = load_corpus_or_die(papers_path, citations_path, nullptr);
            cn_report_options opt;
            cn_report_options_init(&opt);
            opt.cohort_step = cohort_step;
            opt.include_edge_cohorts = include_edge_cohorts ? 1 : 0;
            opt.half_width = half_width;
            opt.k_min_raw = k_min;
            opt.fit_year_step = years_step;
            opt.emit_svg = emit_svg ? 1 : 0;
            require_ok(cn_report_run(corpus.get(), out_dir.c_str(), &opt), "report");
        }
    } catch (const DataError& e) {
        std::cerr << "error: " << e.message << '\n';
        return 2;
    }
    return 0;
}
