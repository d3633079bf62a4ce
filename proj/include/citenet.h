/* citenet: citation-network analytics, C interface.
 *
 * All objects are opaque handles created and destroyed by this library.
 * Functions return CN_OK on success; on failure they return an error code
 * and leave a message retrievable with cn_last_error() (thread-local).
 * Output handle pointers are only written on success.
 */

#ifndef CITENET_H
#define CITENET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cn_status {
    CN_OK = 0,
    CN_ERROR_USAGE = 1,  /* bad arguments / null handles */
    CN_ERROR_DATA = 2,   /* malformed input data */
    CN_ERROR_DOMAIN = 3, /* operation outside its preconditions */
    CN_ERROR_IO = 4,
    CN_ERROR_INTERNAL = 5
} cn_status;

typedef struct cn_corpus cn_corpus;
typedef struct cn_year_series cn_year_series;
typedef struct cn_matrix cn_matrix;
typedef struct cn_distribution cn_distribution;
typedef struct cn_sample cn_sample;
typedef struct cn_exponent_series cn_exponent_series;

/* Last error message for the calling thread; never NULL. */
const char* cn_last_error(void);

/* ------------------------------------------------------------------ */
/* corpus                                                              */

typedef struct cn_filter_config {
    int allow_article;  /* default 1 */
    int allow_review;   /* default 1 */
    int allow_other;    /* default 0 */
    int year_min;       /* default 1900 */
    int year_max;       /* default 2100 */
    int drop_dangling;  /* default 1; 0 turns dangling edges into errors */
} cn_filter_config;

void cn_filter_config_init(cn_filter_config* config);

typedef struct cn_validation_report {
    uint64_t paper_count;
    uint64_t edge_count;
    uint64_t input_paper_count;
    uint64_t input_edge_count;
    uint64_t dropped_papers_doc_type;
    uint64_t dropped_papers_year_range;
    uint64_t dropped_papers_duplicate;
    uint64_t dropped_edges_dangling;
    uint64_t dropped_edges_duplicate;
    uint64_t dropped_edges_self_citation;
    uint64_t pre_publication_edge_count;
} cn_validation_report;

/* Load the tab-separated papers/citations files. `filter` and `report`
 * may be NULL (defaults / no report). */
cn_status cn_load_corpus(const char* papers_path, const char* citations_path,
                         const cn_filter_config* filter, cn_corpus** out,
                         cn_validation_report* report);

/* Recompute the report from the in-memory corpus. */
cn_status cn_corpus_validate(const cn_corpus* corpus, cn_validation_report* report);

cn_status cn_corpus_write(const cn_corpus* corpus, const char* papers_path,
                          const char* citations_path);

void cn_corpus_free(cn_corpus* corpus);

uint64_t cn_corpus_paper_count(const cn_corpus* corpus);
uint64_t cn_corpus_edge_count(const cn_corpus* corpus);
int cn_corpus_year_min(const cn_corpus* corpus);
int cn_corpus_year_max(const cn_corpus* corpus);

/* ------------------------------------------------------------------ */
/* synthetic corpora                                                   */

typedef struct cn_gen_stats {
    uint64_t papers_created;
    uint64_t refs_requested;
    uint64_t edges_created;
    uint64_t dropped_duplicate_target;
    uint64_t dropped_self_target;
} cn_gen_stats;

/* `config_json` uses the documented synth config schema. A non-negative
 * `seed_override` replaces the seed from the config. `stats` may be NULL. */
cn_status cn_generate_corpus(const char* config_json, int64_t seed_override,
                             cn_corpus** out, cn_gen_stats* stats);

/* Canonical effective config (defaults resolved, reference-count family
 * documented). Free the result with cn_string_free. */
cn_status cn_synth_config_canonical(const char* config_json, int64_t seed_override,
                                    char** out_json);

void cn_string_free(char* s);

/* ------------------------------------------------------------------ */
/* per-year counts and growth fits                                     */

cn_status cn_publication_counts(const cn_corpus* corpus, cn_year_series** out);
cn_status cn_journal_counts(const cn_corpus* corpus, cn_year_series** out);
cn_status cn_year_series_create(const int* years, const double* values, size_t n,
                                cn_year_series** out);
/* Keep every `step`-th year starting from the first. */
cn_status cn_year_series_sample(const cn_year_series* series, int step, cn_year_series** out);
/* Restrict to years with positive values (needed before exponential fits). */
cn_status cn_year_series_positive(const cn_year_series* series, cn_year_series** out);

size_t cn_year_series_size(const cn_year_series* series);
int cn_year_series_year(const cn_year_series* series, size_t i);
double cn_year_series_value(const cn_year_series* series, size_t i);
cn_status cn_year_series_write_csv(const cn_year_series* series, const char* path);
void cn_year_series_free(cn_year_series* series);

typedef struct cn_line_fit {
    double slope;
    double intercept;
    double r_squared;
} cn_line_fit;

typedef struct cn_exp_fit {
    double amplitude;
    double growth_rate;
    double r_squared_log;
} cn_exp_fit;

cn_status cn_fit_linear(const cn_year_series* series, cn_line_fit* out);
cn_status cn_fit_exponential(const cn_year_series* series, cn_exp_fit* out);

/* ------------------------------------------------------------------ */
/* cohort distributions                                                */

typedef enum cn_distribution_kind {
    CN_DIST_CITATION = 0,
    CN_DIST_NORMALIZED_CITATION = 1,
    CN_DIST_REFERENCE = 2
} cn_distribution_kind;

cn_status cn_citation_matrix(const cn_corpus* corpus, cn_matrix** out);
uint64_t cn_matrix_excluded_pre_publication(const cn_matrix* matrix);
uint64_t cn_matrix_total(const cn_matrix* matrix);
void cn_matrix_free(cn_matrix* matrix);

cn_status cn_citation_distribution(const cn_matrix* matrix, int year, cn_distribution** out);
cn_status cn_normalized_citation_distribution(const cn_matrix* matrix,
                                              const cn_year_series* pub_counts, int year,
                                              cn_distribution** out);
cn_status cn_reference_distribution(const cn_matrix* matrix, int year, cn_distribution** out);
cn_status cn_align_to_peak(const cn_distribution* dist, cn_distribution** out);

typedef struct cn_peak_stats {
    int peak_year;
    double peak_value;
    int peak_delta;
} cn_peak_stats;

cn_status cn_peak_stats_of(const cn_distribution* dist, int anchor_year, cn_peak_stats* out);

size_t cn_distribution_size(const cn_distribution* dist);
int cn_distribution_cohort_year(const cn_distribution* dist);
cn_distribution_kind cn_distribution_get_kind(const cn_distribution* dist);
int cn_distribution_is_aligned(const cn_distribution* dist);
int cn_distribution_x(const cn_distribution* dist, size_t i);
double cn_distribution_p(const cn_distribution* dist, size_t i);

/* One CSV for any number of distributions (header included). */
cn_status cn_distributions_write_csv(const cn_distribution* const* dists, size_t n,
                                     const char* path);
void cn_distribution_free(cn_distribution* dist);

/* ------------------------------------------------------------------ */
/* degree samples and power-law fits                                   */

typedef enum cn_degree_mode { CN_DEGREE_RAW = 0, CN_DEGREE_NORMALIZED = 1 } cn_degree_mode;

cn_status cn_indegree_sample(const cn_corpus* corpus, int y1, int y2, cn_degree_mode mode,
                             cn_sample** out);
size_t cn_sample_size(const cn_sample* sample);
const double* cn_sample_values(const cn_sample* sample);
void cn_sample_free(cn_sample* sample);

/* Arrays are allocated by the library; free both with cn_buffer_free. */
cn_status cn_degree_histogram(const cn_sample* sample, uint64_t** ks, double** ps, size_t* n);
void cn_buffer_free(void* buffer);

typedef struct cn_power_law_fit {
    double alpha;
    double k_min;
    uint64_t n_tail;
    double log_likelihood;
    int converged;
} cn_power_law_fit;

cn_status cn_fit_power_law_discrete(const cn_sample* sample, uint64_t k_min,
                                    cn_power_law_fit* out);
/* k_min <= 0 selects the smallest positive sample value. */
cn_status cn_fit_power_law_continuous(const cn_sample* sample, double k_min,
                                      cn_power_law_fit* out);

double cn_hurwitz_zeta(double s, double a);

/* k_min <= 0 selects the per-mode default (1 for raw; smallest positive
 * per-window value for normalized). */
cn_status cn_exponent_sweep(const cn_corpus* corpus, const int* centers, size_t n_centers,
                            int half_width, cn_degree_mode mode, double k_min,
                            cn_exponent_series** out);
size_t cn_exponent_series_size(const cn_exponent_series* series);
int cn_exponent_series_center(const cn_exponent_series* series, size_t i);
cn_status cn_exponent_series_fit(const cn_exponent_series* series, size_t i,
                                 cn_power_law_fit* out);
size_t cn_exponent_series_absent_count(const cn_exponent_series* series);
int cn_exponent_series_absent_center(const cn_exponent_series* series, size_t i);
const char* cn_exponent_series_absent_reason(const cn_exponent_series* series, size_t i);
cn_status cn_exponent_series_write_csv(const cn_exponent_series* series, const char* path);
/* Least-squares trend of alpha over the window centers. */
cn_status cn_exponent_series_trend(const cn_exponent_series* series, cn_line_fit* out);
void cn_exponent_series_free(cn_exponent_series* series);

/* ------------------------------------------------------------------ */
/* full report                                                         */

typedef struct cn_report_options {
    int cohort_step;          /* default 5 */
    int include_edge_cohorts; /* default 0 */
    int half_width;           /* default 5 */
    double k_min_raw;         /* <= 0: default (1) */
    double k_min_normalized;  /* <= 0: default (per window) */
    int fit_year_step;        /* default 1 */
    int emit_svg;             /* default 0 */
} cn_report_options;

void cn_report_options_init(cn_report_options* options);

cn_status cn_report_run(const cn_corpus* corpus, const char* out_dir,
                        const cn_report_options* options);

#ifdef __cplusplus
}
#endif

#endif /* CITENET_H */
