#include "citenet.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "citenet/corpus.hpp"
#include "citenet/counts.hpp"
#include "citenet/distributions.hpp"
#include "citenet/error.hpp"
#include "citenet/io.hpp"
#include "citenet/powerlaw.hpp"
#include "citenet/report.hpp"
#include "citenet/synth.hpp"

struct cn_corpus {
    citenet::Corpus value;
};
struct cn_year_series {
    citenet::YearSeries value;
};
struct cn_matrix {
    citenet::CitationMatrix value;
};
struct cn_distribution {
    citenet::CohortDistribution value;
};
struct cn_sample {
    citenet::DegreeSample value;
};
struct cn_exponent_series {
    citenet::ExponentSeries value;
};

namespace {

thread_local std::string t_last_error;

cn_status status_of(citenet::ErrorKind kind) {
    switch (kind) {
        case citenet::ErrorKind::parse: return CN_ERROR_DATA;
        case citenet::ErrorKind::domain: return CN_ERROR_DOMAIN;
        case citenet::ErrorKind::io: return CN_ERROR_IO;
    }
    return CN_ERROR_INTERNAL;
}

template <typename F>
cn_status guarded(F&& f) {
    try {
        return f();
    } catch (const citenet::Error& e) {
        t_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return CN_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return CN_ERROR_INTERNAL;
    }
}

cn_status usage_error(const char* message) {
    t_last_error = message;
    return CN_ERROR_USAGE;
}

void fill_report(const citenet::ValidationReport& in, cn_validation_report* out) {
    auto get = [](const std::map<std::string, std::size_t>& m, const char* key) -> uint64_t {
        auto it = m.find(key);
        return it == m.end() ? 0 : it->second;
    };
    out->paper_count = in.paper_count;
    out->edge_count = in.edge_count;
    out->input_paper_count = in.input_paper_count;
    out->input_edge_count = in.input_edge_count;
    out->dropped_papers_doc_type = get(in.dropped_papers_by_reason, "doc_type");
    out->dropped_papers_year_range = get(in.dropped_papers_by_reason, "year_range");
    out->dropped_papers_duplicate = get(in.dropped_papers_by_reason, "duplicate");
    out->dropped_edges_dangling = get(in.dropped_edges_by_reason, "dangling");
    out->dropped_edges_duplicate = get(in.dropped_edges_by_reason, "duplicate");
    out->dropped_edges_self_citation = get(in.dropped_edges_by_reason, "self_citation");
    out->pre_publication_edge_count = in.pre_publication_edge_count;
}

citenet::FilterConfig to_filter(const cn_filter_config* c) {
    citenet::FilterConfig f;
    if (c) {
        f.allow_article = c->allow_article != 0;
        f.allow_review = c->allow_review != 0;
        f.allow_other = c->allow_other != 0;
        f.year_min = c->year_min;
        f.year_max = c->year_max;
        f.drop_dangling = c->drop_dangling != 0;
    }
    return f;
}

citenet::SynthConfig parse_synth_config(const char* config_json, int64_t seed_override) {
    citenet::SynthConfig cfg = citenet::SynthConfig::from_json(config_json);
    if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);
    return cfg;
}

void fill_fit(const citenet::PowerLawFit& fit, cn_power_law_fit* out) {
    out->alpha = fit.alpha;
    out->k_min = fit.k_min;
    out->n_tail = fit.n_tail;
    out->log_likelihood = fit.log_likelihood;
    out->converged = fit.converged ? 1 : 0;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* cn_last_error(void) { return t_last_error.c_str(); }

void cn_filter_config_init(cn_filter_config* config) {
    if (!config) return;
    config->allow_article = 1;
    config->allow_review = 1;
    config->allow_other = 0;
    config->year_min = 1900;
    config->year_max = 2100;
    config->drop_dangling = 1;
}

cn_status cn_load_corpus(const char* papers_path, const char* citations_path,
                         const cn_filter_config* filter, cn_corpus** out,
                         cn_validation_report* report) {
    if (!papers_path || !citations_path || !out) return usage_error("cn_load_corpus: null argument");
    return guarded([&] {
        auto result = citenet::load_corpus_files(papers_path, citations_path, to_filter(filter));
        if (report) fill_report(result.report, report);
        *out = new cn_corpus{std::move(result.corpus)};
        return CN_OK;
    });
}

cn_status cn_corpus_validate(const cn_corpus* corpus, cn_validation_report* report) {
    if (!corpus || !report) return usage_error("cn_corpus_validate: null argument");
    return guarded([&] {
        fill_report(corpus->value.validate(), report);
        return CN_OK;
    });
}

cn_status cn_corpus_write(const cn_corpus* corpus, const char* papers_path,
                          const char* citations_path) {
    if (!corpus || !papers_path || !citations_path)
        return usage_error("cn_corpus_write: null argument");
    return guarded([&] {
        citenet::write_corpus_files(corpus->value, papers_path, citations_path);
        return CN_OK;
    });
}

void cn_corpus_free(cn_corpus* corpus) { delete corpus; }

uint64_t cn_corpus_paper_count(const cn_corpus* corpus) {
    return corpus ? corpus->value.paper_count() : 0;
}
uint64_t cn_corpus_edge_count(const cn_corpus* corpus) {
    return corpus ? corpus->value.edge_count() : 0;
}
int cn_corpus_year_min(const cn_corpus* corpus) { return corpus ? corpus->value.year_min() : 0; }
int cn_corpus_year_max(const cn_corpus* corpus) { return corpus ? corpus->value.year_max() : -1; }

cn_status cn_generate_corpus(const char* config_json, int64_t seed_override, cn_corpus** out,
                             cn_gen_stats* stats) {
    if (!config_json || !out) return usage_error("cn_generate_corpus: null argument");
    return guarded([&] {
        citenet::SynthConfig cfg = parse_synth_config(config_json, seed_override);
        citenet::GenStats gen_stats;
        citenet::Corpus corpus = citenet::generate(cfg, gen_stats);
        if (stats) {
            stats->papers_created = gen_stats.papers_created;
            stats->refs_requested = gen_stats.refs_requested;
            stats->edges_created = gen_stats.edges_created;
            stats->dropped_duplicate_target = gen_stats.dropped_duplicate_target;
            stats->dropped_self_target = gen_stats.dropped_self_target;
        }
        *out = new cn_corpus{std::move(corpus)};
        return CN_OK;
    });
}

cn_status cn_synth_config_canonical(const char* config_json, int64_t seed_override,
                                    char** out_json) {
    if (!config_json || !out_json)
        return usage_error("cn_synth_config_canonical: null argument");
    return guarded([&] {
        citenet::SynthConfig cfg = parse_synth_config(config_json, seed_override);
        char* dup = dup_string(cfg.to_json());
        if (!dup) {
            t_last_error = "out of memory";
            return CN_ERROR_INTERNAL;
        }
        *out_json = dup;
        return CN_OK;
    });
}

void cn_string_free(char* s) { std::free(s); }

cn_status cn_publication_counts(const cn_corpus* corpus, cn_year_series** out) {
    if (!corpus || !out) return usage_error("cn_publication_counts: null argument");
    return guarded([&] {
        *out = new cn_year_series{citenet::publication_counts(corpus->value)};
        return CN_OK;
    });
}

cn_status cn_journal_counts(const cn_corpus* corpus, cn_year_series** out) {
    if (!corpus || !out) return usage_error("cn_journal_counts: null argument");
    return guarded([&] {
        *out = new cn_year_series{citenet::journal_counts(corpus->value)};
        return CN_OK;
    });
}

cn_status cn_year_series_create(const int* years, const double* values, size_t n,
                                cn_year_series** out) {
    if ((!years || !values) && n > 0) return usage_error("cn_year_series_create: null argument");
    if (!out) return usage_error("cn_year_series_create: null argument");
    return guarded([&] {
        std::vector<std::pair<int, double>> pts;
        pts.reserve(n);
        for (size_t i = 0; i < n; ++i) pts.emplace_back(years[i], values[i]);
        *out = new cn_year_series{citenet::YearSeries(std::move(pts))};
        return CN_OK;
    });
}

cn_status cn_year_series_sample(const cn_year_series* series, int step, cn_year_series** out) {
    if (!series || !out) return usage_error("cn_year_series_sample: null argument");
    return guarded([&] {
        *out = new cn_year_series{series->value.sampled(step)};
        return CN_OK;
    });
}

cn_status cn_year_series_positive(const cn_year_series* series, cn_year_series** out) {
    if (!series || !out) return usage_error("cn_year_series_positive: null argument");
    return guarded([&] {
        *out = new cn_year_series{series->value.positive_only()};
        return CN_OK;
    });
}

size_t cn_year_series_size(const cn_year_series* series) {
    return series ? series->value.size() : 0;
}
int cn_year_series_year(const cn_year_series* series, size_t i) {
    return series && i < series->value.size() ? series->value.year(i) : 0;
}
double cn_year_series_value(const cn_year_series* series, size_t i) {
    return series && i < series->value.size() ? series->value.value(i) : 0.0;
}

cn_status cn_year_series_write_csv(const cn_year_series* series, const char* path) {
    if (!series || !path) return usage_error("cn_year_series_write_csv: null argument");
    return guarded([&] {
        citenet::write_file_atomic(path, series->value.to_csv());
        return CN_OK;
    });
}

void cn_year_series_free(cn_year_series* series) { delete series; }

cn_status cn_fit_linear(const cn_year_series* series, cn_line_fit* out) {
    if (!series || !out) return usage_error("cn_fit_linear: null argument");
    return guarded([&] {
        citenet::LineFit fit = citenet::fit_linear(series->value);
        out->slope = fit.slope;
        out->intercept = fit.intercept;
        out->r_squared = fit.r_squared;
        return CN_OK;
    });
}

cn_status cn_fit_exponential(const cn_year_series* series, cn_exp_fit* out) {
    if (!series || !out) return usage_error("cn_fit_exponential: null argument");
    return guarded([&] {
        citenet::ExpFit fit = citenet::fit_exponential(series->value);
        out->amplitude = fit.amplitude;
        out->growth_rate = fit.growth_rate;
        out->r_squared_log = fit.r_squared_log;
        return CN_OK;
    });
}

cn_status cn_citation_matrix(const cn_corpus* corpus, cn_matrix** out) {
    if (!corpus || !out) return usage_error("cn_citation_matrix: null argument");
    return guarded([&] {
        *out = new cn_matrix{citenet::citation_counts_matrix(corpus->value)};
        return CN_OK;
    });
}

uint64_t cn_matrix_excluded_pre_publication(const cn_matrix* matrix) {
    return matrix ? matrix->value.excluded_pre_publication() : 0;
}
uint64_t cn_matrix_total(const cn_matrix* matrix) { return matrix ? matrix->value.total() : 0; }
void cn_matrix_free(cn_matrix* matrix) { delete matrix; }

cn_status cn_citation_distribution(const cn_matrix* matrix, int year, cn_distribution** out) {
    if (!matrix || !out) return usage_error("cn_citation_distribution: null argument");
    return guarded([&] {
        *out = new cn_distribution{citenet::citation_distribution(matrix->value, year)};
        return CN_OK;
    });
}

cn_status cn_normalized_citation_distribution(const cn_matrix* matrix,
                                              const cn_year_series* pub_counts, int year,
                                              cn_distribution** out) {
    if (!matrix || !pub_counts || !out)
        return usage_error("cn_normalized_citation_distribution: null argument");
    return guarded([&] {
        *out = new cn_distribution{
            citenet::normalized_citation_distribution(matrix->value, pub_counts->value, year)};
        return CN_OK;
    });
}

cn_status cn_reference_distribution(const cn_matrix* matrix, int year, cn_distribution** out) {
    if (!matrix || !out) return usage_error("cn_reference_distribution: null argument");
    return guarded([&] {
        *out = new cn_distribution{citenet::reference_distribution(matrix->value, year)};
        return CN_OK;
    });
}

cn_status cn_align_to_peak(const cn_distribution* dist, cn_distribution** out) {
    if (!dist || !out) return usage_error("cn_align_to_peak: null argument");
    return guarded([&] {
        *out = new cn_distribution{citenet::align_to_peak(dist->value)};
        return CN_OK;
    });
}

cn_status cn_peak_stats_of(const cn_distribution* dist, int anchor_year, cn_peak_stats* out) {
    if (!dist || !out) return usage_error("cn_peak_stats_of: null argument");
    return guarded([&] {
        citenet::PeakStats p = citenet::peak_stats(dist->value, anchor_year);
        out->peak_year = p.peak_year;
        out->peak_value = p.peak_value;
        out->peak_delta = p.peak_delta;
        return CN_OK;
    });
}

size_t cn_distribution_size(const cn_distribution* dist) {
    return dist ? dist->value.size() : 0;
}
int cn_distribution_cohort_year(const cn_distribution* dist) {
    return dist ? dist->value.cohort_year : 0;
}
cn_distribution_kind cn_distribution_get_kind(const cn_distribution* dist) {
    if (!dist) return CN_DIST_CITATION;
    switch (dist->value.kind) {
        case citenet::DistributionKind::citation: return CN_DIST_CITATION;
        case citenet::DistributionKind::normalized_citation: return CN_DIST_NORMALIZED_CITATION;
        case citenet::DistributionKind::reference: return CN_DIST_REFERENCE;
    }
    return CN_DIST_CITATION;
}
int cn_distribution_is_aligned(const cn_distribution* dist) {
    return dist && dist->value.aligned ? 1 : 0;
}
int cn_distribution_x(const cn_distribution* dist, size_t i) {
    return dist && i < dist->value.size() ? dist->value.support[i] : 0;
}
double cn_distribution_p(const cn_distribution* dist, size_t i) {
    return dist && i < dist->value.size() ? dist->value.probability[i] : 0.0;
}

cn_status cn_distributions_write_csv(const cn_distribution* const* dists, size_t n,
                                     const char* path) {
    if ((!dists && n > 0) || !path)
        return usage_error("cn_distributions_write_csv: null argument");
    return guarded([&] {
        std::vector<citenet::CohortDistribution> copies;
        copies.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            if (!dists[i]) return usage_error("cn_distributions_write_csv: null distribution");
            copies.push_back(dists[i]->value);
        }
        std::ostringstream csv;
        citenet::write_distributions_csv(copies, csv);
        citenet::write_file_atomic(path, csv.str());
        return CN_OK;
    });
}

void cn_distribution_free(cn_distribution* dist) { delete dist; }

cn_status cn_indegree_sample(const cn_corpus* corpus, int y1, int y2, cn_degree_mode mode,
                             cn_sample** out) {
    if (!corpus || !out) return usage_error("cn_indegree_sample: null argument");
    return guarded([&] {
        auto m = mode == CN_DEGREE_RAW ? citenet::DegreeMode::raw : citenet::DegreeMode::normalized;
        *out = new cn_sample{citenet::indegree_sample(corpus->value, y1, y2, m)};
        return CN_OK;
    });
}

size_t cn_sample_size(const cn_sample* sample) { return sample ? sample->value.values.size() : 0; }
const double* cn_sample_values(const cn_sample* sample) {
    return sample ? sample->value.values.data() : nullptr;
}
void cn_sample_free(cn_sample* sample) { delete sample; }

cn_status cn_degree_histogram(const cn_sample* sample, uint64_t** ks, double** ps, size_t* n) {
    if (!sample || !ks || !ps || !n) return usage_error("cn_degree_histogram: null argument");
    return guarded([&] {
        citenet::DegreeHistogram h = citenet::degree_histogram(sample->value);
        auto* k_buf = static_cast<uint64_t*>(std::malloc(sizeof(uint64_t) * h.pmf.size()));
        auto* p_buf = static_cast<double*>(std::malloc(sizeof(double) * h.pmf.size()));
        if (!k_buf || !p_buf) {
            std::free(k_buf);
            std::free(p_buf);
            t_last_error = "out of memory";
            return CN_ERROR_INTERNAL;
        }
        for (size_t i = 0; i < h.pmf.size(); ++i) {
            k_buf[i] = h.pmf[i].first;
            p_buf[i] = h.pmf[i].second;
        }
        *ks = k_buf;
        *ps = p_buf;
        *n = h.pmf.size();
        return CN_OK;
    });
}

void cn_buffer_free(void* buffer) { std::free(buffer); }

cn_status cn_fit_power_law_discrete(const cn_sample* sample, uint64_t k_min,
                                    cn_power_law_fit* out) {
    if (!sample || !out) return usage_error("cn_fit_power_law_discrete: null argument");
    return guarded([&] {
        fill_fit(citenet::fit_power_law_discrete(sample->value, k_min), out);
        return CN_OK;
    });
}

cn_status cn_fit_power_law_continuous(const cn_sample* sample, double k_min,
                                      cn_power_law_fit* out) {
    if (!sample || !out) return usage_error("cn_fit_power_law_continuous: null argument");
    return guarded([&] {
        citenet::PowerLawFit fit = k_min > 0.0
                                       ? citenet::fit_power_law_continuous(sample->value, k_min)
                                       : citenet::fit_power_law_continuous(sample->value);
        fill_fit(fit, out);
        return CN_OK;
    });
}

double cn_hurwitz_zeta(double s, double a) {
    try {
        return citenet::hurwitz_zeta(s, a);
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return -1.0;
    }
}

cn_status cn_exponent_sweep(const cn_corpus* corpus, const int* centers, size_t n_centers,
                            int half_width, cn_degree_mode mode, double k_min,
                            cn_exponent_series** out) {
    if (!corpus || !out || (!centers && n_centers > 0))
        return usage_error("cn_exponent_sweep: null argument");
    return guarded([&] {
        auto m = mode == CN_DEGREE_RAW ? citenet::DegreeMode::raw : citenet::DegreeMode::normalized;
        std::optional<double> km;
        if (k_min > 0.0) km = k_min;
        std::vector<int> cs(centers, centers + n_centers);
        *out = new cn_exponent_series{
            citenet::exponent_sweep(corpus->value, cs, half_width, m, km)};
        return CN_OK;
    });
}

size_t cn_exponent_series_size(const cn_exponent_series* series) {
    return series ? series->value.fits.size() : 0;
}
int cn_exponent_series_center(const cn_exponent_series* series, size_t i) {
    return series && i < series->value.fits.size() ? series->value.fits[i].first : 0;
}

cn_status cn_exponent_series_fit(const cn_exponent_series* series, size_t i,
                                 cn_power_law_fit* out) {
    if (!series || !out) return usage_error("cn_exponent_series_fit: null argument");
    if (i >= series->value.fits.size())
        return usage_error("cn_exponent_series_fit: index out of range");
    fill_fit(series->value.fits[i].second, out);
    return CN_OK;
}

size_t cn_exponent_series_absent_count(const cn_exponent_series* series) {
    return series ? series->value.absent.size() : 0;
}
int cn_exponent_series_absent_center(const cn_exponent_series* series, size_t i) {
    return series && i < series->value.absent.size() ? series->value.absent[i].first : 0;
}
const char* cn_exponent_series_absent_reason(const cn_exponent_series* series, size_t i) {
    return series && i < series->value.absent.size() ? series->value.absent[i].second.c_str() : "";
}

cn_status cn_exponent_series_write_csv(const cn_exponent_series* series, const char* path) {
    if (!series || !path) return usage_error("cn_exponent_series_write_csv: null argument");
    return guarded([&] {
        std::ostringstream csv;
        series->value.write_csv(csv);
        citenet::write_file_atomic(path, csv.str());
        return CN_OK;
    });
}

cn_status cn_exponent_series_trend(const cn_exponent_series* series, cn_line_fit* out) {
    if (!series || !out) return usage_error("cn_exponent_series_trend: null argument");
    return guarded([&] {
        citenet::LineFit fit = citenet::fit_linear(series->value.alpha_series());
        out->slope = fit.slope;
        out->intercept = fit.intercept;
        out->r_squared = fit.r_squared;
        return CN_OK;
    });
}

void cn_exponent_series_free(cn_exponent_series* series) { delete series; }

void cn_report_options_init(cn_report_options* options) {
    if (!options) return;
    options->cohort_step = 5;
    options->include_edge_cohorts = 0;
    options->half_width = 5;
    options->k_min_raw = 0.0;
    options->k_min_normalized = 0.0;
    options->fit_year_step = 1;
    options->emit_svg = 0;
}

cn_status cn_report_run(const cn_corpus* corpus, const char* out_dir,
                        const cn_report_options* options) {
    if (!corpus || !out_dir) return usage_error("cn_report_run: null argument");
    return guarded([&] {
        citenet::ReportOptions opt;
        if (options) {
            opt.cohort_step = options->cohort_step;
            opt.include_edge_cohorts = options->include_edge_cohorts != 0;
            opt.half_width = options->half_width;
            if (options->k_min_raw > 0.0) opt.k_min_raw = options->k_min_raw;
            if (options->k_min_normalized > 0.0) opt.k_min_normalized = options->k_min_normalized;
            opt.fit_year_step = options->fit_year_step;
            opt.emit_svg = options->emit_svg != 0;
        }
        citenet::run_report(corpus->value, out_dir, opt);
        return CN_OK;
    });
}

}  // extern "C"
