#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "citenet.h"

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / "citenet_capi_test";
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const char* name) const { return (path / name).string(); }
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

constexpr const char* kPapers =
    "id\tyear\tvenue\tdoc_type\n"
    "A\t2000\tV1\tarticle\n"
    "B\t2001\tV1\treview\n"
    "C\t2001\tV2\tother\n"
    "D\t2002\tV2\tarticle\n";
constexpr const char* kCitations =
    "citing_id\tcited_id\n"
    "B\tA\n"
    "C\tA\n"
    "D\tA\n"
    "D\tB\n";

}  // namespace

TEST_CASE("load, validate, analyze and free through the C API") {
    TempDir dir;
    write_file(dir.file("papers.tsv"), kPapers);
    write_file(dir.file("citations.tsv"), kCitations);

    cn_corpus* corpus = nullptr;
    cn_validation_report report{};
    REQUIRE(cn_load_corpus(dir.file("papers.tsv").c_str(), dir.file("citations.tsv").c_str(),
                           nullptr, &corpus, &report) == CN_OK);
    CHECK(report.paper_count == 3);  // C (doc type other) is dropped
    CHECK(report.edge_count == 3);   // C -> A goes dangling with it
    CHECK(report.dropped_papers_doc_type == 1);
    CHECK(report.dropped_edges_dangling == 1);
    CHECK(cn_corpus_paper_count(corpus) == 3);
    CHECK(cn_corpus_edge_count(corpus) == 3);
    CHECK(cn_corpus_year_min(corpus) == 2000);
    CHECK(cn_corpus_year_max(corpus) == 2002);

    cn_validation_report again{};
    REQUIRE(cn_corpus_validate(corpus, &again) == CN_OK);
    CHECK(again.paper_count == report.paper_count);
    CHECK(again.edge_count == report.edge_count);

    cn_year_series* pubs = nullptr;
    REQUIRE(cn_publication_counts(corpus, &pubs) == CN_OK);
    CHECK(cn_year_series_size(pubs) == 3);
    CHECK(cn_year_series_value(pubs, 0) == 1.0);

    cn_year_series* journals = nullptr;
    REQUIRE(cn_journal_counts(corpus, &journals) == CN_OK);
    CHECK(cn_year_series_value(journals, 0) == 1.0);

    cn_matrix* matrix = nullptr;
    REQUIRE(cn_citation_matrix(corpus, &matrix) == CN_OK);
    CHECK(cn_matrix_total(matrix) == 3);
    CHECK(cn_matrix_excluded_pre_publication(matrix) == 0);

    cn_distribution* dist = nullptr;
    REQUIRE(cn_citation_distribution(matrix, 2000, &dist) == CN_OK);
    CHECK(cn_distribution_size(dist) == 2);
    CHECK(cn_distribution_cohort_year(dist) == 2000);
    CHECK(cn_distribution_get_kind(dist) == CN_DIST_CITATION);
    CHECK(cn_distribution_p(dist, 0) == doctest::Approx(0.5));

    cn_distribution* aligned = nullptr;
    REQUIRE(cn_align_to_peak(dist, &aligned) == CN_OK);
    CHECK(cn_distribution_is_aligned(aligned) == 1);
    CHECK(cn_distribution_x(aligned, 0) == 0);

    cn_peak_stats peak{};
    REQUIRE(cn_peak_stats_of(dist, 2000, &peak) == CN_OK);
    CHECK(peak.peak_year == 2001);
    CHECK(peak.peak_delta == 1);

    cn_distribution* norm = nullptr;
    REQUIRE(cn_normalized_citation_distribution(matrix, pubs, 2000, &norm) == CN_OK);
    CHECK(cn_distribution_get_kind(norm) == CN_DIST_NORMALIZED_CITATION);

    const cn_distribution* both[] = {dist, norm};
    REQUIRE(cn_distributions_write_csv(both, 2, dir.file("dists.csv").c_str()) == CN_OK);
    std::ifstream csv(dir.file("dists.csv"));
    std::string header;
    std::getline(csv, header);
    CHECK(header == "cohort_year,kind,x,probability");

    cn_sample* sample = nullptr;
    REQUIRE(cn_indegree_sample(corpus, 2000, 2002, CN_DEGREE_RAW, &sample) == CN_OK);
    CHECK(cn_sample_size(sample) == 3);
    CHECK(cn_sample_values(sample)[0] == 2.0);  // A cited in-window by B and D

    uint64_t* ks = nullptr;
    double* ps = nullptr;
    size_t n = 0;
    REQUIRE(cn_degree_histogram(sample, &ks, &ps, &n) == CN_OK);
    double mass = 0.0;
    for (size_t i = 0; i < n; ++i) mass += ps[i];
    CHECK(mass == doctest::Approx(1.0));
    cn_buffer_free(ks);
    cn_buffer_free(ps);

    cn_sample_free(sample);
    cn_distribution_free(aligned);
    cn_distribution_free(norm);
    cn_distribution_free(dist);
    cn_matrix_free(matrix);
    cn_year_series_free(journals);
    cn_year_series_free(pubs);
    cn_corpus_free(corpus);
}

TEST_CASE("error codes and messages") {
    cn_corpus* corpus = nullptr;
    CHECK(cn_load_corpus("/nonexistent/papers.tsv", "/nonexistent/citations.tsv", nullptr,
                         &corpus, nullptr) == CN_ERROR_IO);
    CHECK(std::strlen(cn_last_error()) > 0);

    CHECK(cn_load_corpus(nullptr, nullptr, nullptr, nullptr, nullptr) == CN_ERROR_USAGE);

    TempDir dir;
    write_file(dir.file("papers.tsv"), "id\tyear\tvenue\tdoc_type\nA\tbad\tV\tarticle\n");
    write_file(dir.file("citations.tsv"), "citing_id\tcited_id\n");
    CHECK(cn_load_corpus(dir.file("papers.tsv").c_str(), dir.file("citations.tsv").c_str(),
                         nullptr, &corpus, nullptr) == CN_ERROR_DATA);
    CHECK(std::string(cn_last_error()).find("line 2") != std::string::npos);

    // domain error: distribution of a cohort with no citations
    write_file(dir.file("papers.tsv"), kPapers);
    write_file(dir.file("citations.tsv"), kCitations);
    REQUIRE(cn_load_corpus(dir.file("papers.tsv").c_str(), dir.file("citations.tsv").c_str(),
                           nullptr, &corpus, nullptr) == CN_OK);
    cn_matrix* matrix = nullptr;
    REQUIRE(cn_citation_matrix(corpus, &matrix) == CN_OK);
    cn_distribution* dist = nullptr;
    CHECK(cn_citation_distribution(matrix, 2002, &dist) == CN_ERROR_DOMAIN);
    CHECK(dist == nullptr);
    cn_matrix_free(matrix);
    cn_corpus_free(corpus);
}

TEST_CASE("filter config is honored") {
    TempDir dir;
    write_file(dir.file("papers.tsv"), kPapers);
    write_file(dir.file("citations.tsv"), kCitations);
    cn_filter_config filter;
    cn_filter_config_init(&filter);
    filter.allow_other = 1;
    cn_corpus* corpus = nullptr;
    REQUIRE(cn_load_corpus(dir.file("papers.tsv").c_str(), dir.file("citations.tsv").c_str(),
                           &filter, &corpus, nullptr) == CN_OK);
    CHECK(cn_corpus_paper_count(corpus) == 4);
    CHECK(cn_corpus_edge_count(corpus) == 4);
    cn_corpus_free(corpus);
}

TEST_CASE("generate, write and reload through the C API") {
    TempDir dir;
    const char* config = R"({"years": 8, "base_papers": 60, "growth_rate": 1.05,
                             "refs_mean": 5.0, "seed": 17})";
    cn_corpus* corpus = nullptr;
    cn_gen_stats stats{};
    REQUIRE(cn_generate_corpus(config, -1, &corpus, &stats) == CN_OK);
    CHECK(stats.papers_created == cn_corpus_paper_count(corpus));
    CHECK(stats.edges_created == cn_corpus_edge_count(corpus));

    REQUIRE(cn_corpus_write(corpus, dir.file("papers.tsv").c_str(),
                            dir.file("citations.tsv").c_str()) == CN_OK);
    cn_corpus* reloaded = nullptr;
    cn_validation_report report{};
    REQUIRE(cn_load_corpus(dir.file("papers.tsv").c_str(), dir.file("citations.tsv").c_str(),
                           nullptr, &reloaded, &report) == CN_OK);
    CHECK(cn_corpus_paper_count(reloaded) == cn_corpus_paper_count(corpus));
    CHECK(cn_corpus_edge_count(reloaded) == cn_corpus_edge_count(corpus));
    CHECK(report.dropped_edges_dangling == 0);
    CHECK(report.dropped_edges_duplicate == 0);

    // seed override changes the corpus
    cn_corpus* other = nullptr;
    REQUIRE(cn_generate_corpus(config, 99, &other, nullptr) == CN_OK);
    CHECK(cn_corpus_edge_count(other) != cn_corpus_edge_count(corpus));
    cn_corpus_free(other);

    char* canonical = nullptr;
    REQUIRE(cn_synth_config_canonical(config, -1, &canonical) == CN_OK);
    CHECK(std::string(canonical).find("poisson") != std::string::npos);
    cn_string_free(canonical);

    cn_corpus* bad = nullptr;
    CHECK(cn_generate_corpus("{ not json", -1, &bad, nullptr) == CN_ERROR_DATA);

    cn_corpus_free(reloaded);
    cn_corpus_free(corpus);
}

TEST_CASE("power-law fitting and sweeps through the C API") {
    const char* config = R"({"years": 12, "base_papers": 150, "growth_rate": 1.06,
                             "refs_mean": 8.0, "seed": 23})";
    cn_corpus* corpus = nullptr;
    REQUIRE(cn_generate_corpus(config, -1, &corpus, nullptr) == CN_OK);

    int y0 = cn_corpus_year_min(corpus);
    cn_sample* sample = nullptr;
    REQUIRE(cn_indegree_sample(corpus, y0, y0 + 11, CN_DEGREE_RAW, &sample) == CN_OK);
    cn_power_law_fit fit{};
    REQUIRE(cn_fit_power_law_discrete(sample, 1, &fit) == CN_OK);
    CHECK(fit.alpha > 1.0);
    CHECK(fit.n_tail >= 10);
    cn_sample_free(sample);

    cn_sample* norm = nullptr;
    REQUIRE(cn_indegree_sample(corpus, y0, y0 + 11, CN_DEGREE_NORMALIZED, &norm) == CN_OK);
    cn_power_law_fit cfit{};
    REQUIRE(cn_fit_power_law_continuous(norm, 0.0, &cfit) == CN_OK);  // auto k_min
    CHECK(cfit.k_min > 0.0);
    cn_sample_free(norm);

    int centers[] = {y0 + 3, y0 + 5, y0 + 8, y0 + 40};  // last window is empty
    cn_exponent_series* sweep = nullptr;
    REQUIRE(cn_exponent_sweep(corpus, centers, 4, 3, CN_DEGREE_RAW, 0.0, &sweep) == CN_OK);
    CHECK(cn_exponent_series_size(sweep) == 3);
    CHECK(cn_exponent_series_absent_count(sweep) == 1);
    CHECK(cn_exponent_series_absent_center(sweep, 0) == y0 + 40);
    CHECK(std::strlen(cn_exponent_series_absent_reason(sweep, 0)) > 0);
    cn_line_fit trend{};
    REQUIRE(cn_exponent_series_trend(sweep, &trend) == CN_OK);

    TempDir dir;
    REQUIRE(cn_exponent_series_write_csv(sweep, dir.file("sweep.csv").c_str()) == CN_OK);
    std::ifstream csv(dir.file("sweep.csv"));
    std::string header;
    std::getline(csv, header);
    CHECK(header == "center_year,mode,alpha,k_min,n_tail,converged");

    cn_exponent_series_free(sweep);
    cn_corpus_free(corpus);

    CHECK(cn_hurwitz_zeta(2.0, 1.0) == doctest::Approx(1.6449340668482264).epsilon(1e-12));
}

TEST_CASE("report pipeline through the C API") {
    const char* config = R"({"years": 14, "base_papers": 100, "growth_rate": 1.07,
                             "refs_mean": 7.0, "seed": 29})";
    cn_corpus* corpus = nullptr;
    REQUIRE(cn_generate_corpus(config, -1, &corpus, nullptr) == CN_OK);
    TempDir dir;
    cn_report_options opt;
    cn_report_options_init(&opt);
    opt.half_width = 3;
    opt.cohort_step = 3;
    opt.emit_svg = 1;
    REQUIRE(cn_report_run(corpus, dir.file("out").c_str(), &opt) == CN_OK);
    for (const char* name :
         {"publications.csv", "journals.csv", "growth_fits.csv", "references.csv",
          "references_aligned.csv", "references_peaks.csv", "citations.csv",
          "citations_normalized.csv", "exponents_raw.csv", "exponents_normalized.csv",
          "exponent_slopes.csv", "growth.svg", "exponents.svg"}) {
        CHECK(fs::exists(dir.path / "out" / name));
    }
    cn_corpus_free(corpus);
}
