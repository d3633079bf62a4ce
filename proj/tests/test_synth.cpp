#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <set>

#include "citenet/counts.hpp"
#include "citenet/distributions.hpp"
#include "citenet/error.hpp"
#include "citenet/synth.hpp"
#include "oracles.hpp"

using namespace citenet;

TEST_CASE("flat growth produces constant cohort sizes") {
    SynthConfig cfg;
    cfg.years = 5;
    cfg.base_papers = 100;
    cfg.growth_rate = 1.0;
    cfg.refs_mean = 3.0;
    cfg.seed = 11;
    Corpus corpus = generate(cfg);
    YearSeries pubs = publication_counts(corpus);
    REQUIRE(pubs.size() == 5);
    for (std::size_t i = 0; i < pubs.size(); ++i) CHECK(pubs.value(i) == 100.0);
}

TEST_CASE("generation is deterministic in the seed") {
    SynthConfig cfg;
    cfg.years = 12;
    cfg.base_papers = 50;
    cfg.growth_rate = 1.06;
    cfg.refs_mean = 6.0;
    cfg.seed = 77;
    GenStats s1, s2;
    Corpus a = generate(cfg, s1);
    Corpus b = generate(cfg, s2);
    CHECK(a == b);  // papers (ids, years, venues) and edges, element-wise
    CHECK(s1.edges_created == s2.edges_created);
    CHECK(s1.dropped_duplicate_target == s2.dropped_duplicate_target);

    cfg.seed = 78;
    Corpus c = generate(cfg);
    CHECK_FALSE(a == c);
}

TEST_CASE("edge count sits within 3 sigma of the analytic expectation") {
    SynthConfig cfg;
    cfg.years = 30;
    cfg.base_papers = 200;
    cfg.growth_rate = 1.08;
    cfg.refs_mean = 10.0;
    cfg.seed = 5;

    double n_total = 0.0;
    for (int t = 0; t < cfg.years; ++t)
        n_total += std::round(cfg.base_papers * std::pow(cfg.growth_rate, t));
    const double expected_draws = cfg.refs_mean * n_total;

    // losses (duplicate/self rejections) estimated from independent reruns
    double loss_sum = 0.0;
    for (std::uint64_t seed : {101u, 102u, 103u}) {
        SynthConfig probe = cfg;
        probe.seed = seed;
        GenStats st;
        generate(probe, st);
        loss_sum += static_cast<double>(st.refs_requested - st.edges_created);
    }
    const double expected_losses = loss_sum / 3.0;

    GenStats stats;
    Corpus corpus = generate(cfg, stats);
    CHECK(corpus.edge_count() == stats.edges_created);
    const double sigma = std::sqrt(expected_draws);
    CHECK(std::abs(static_cast<double>(corpus.edge_count()) -
                   (expected_draws - expected_losses)) <= 3.0 * sigma);
}

TEST_CASE("no edge violates the pre-publication bound beyond age -1") {
    SynthConfig cfg;
    cfg.years = 15;
    cfg.base_papers = 80;
    cfg.growth_rate = 1.1;
    cfg.refs_mean = 8.0;
    cfg.epsilon = 0.05;
    cfg.seed = 9;
    Corpus corpus = generate(cfg);
    bool saw_minus_one = false;
    for (const CitationEdge& e : corpus.edges()) {
        int age = corpus.paper(e.citing).year - corpus.paper(e.cited).year;
        CHECK(age >= -1);
        if (age == -1) saw_minus_one = true;
    }
    CHECK(saw_minus_one);  // epsilon channel fires at this size
    CHECK(corpus.validate().pre_publication_edge_count == 0);
}

TEST_CASE("epsilon zero disables the age -1 channel") {
    SynthConfig cfg;
    cfg.years = 10;
    cfg.base_papers = 60;
    cfg.refs_mean = 6.0;
    cfg.epsilon = 0.0;
    cfg.seed = 13;
    Corpus corpus = generate(cfg);
    for (const CitationEdge& e : corpus.edges())
        CHECK(corpus.paper(e.citing).year >= corpus.paper(e.cited).year);
}

TEST_CASE("journal regimes bound the venue counts") {
    SynthConfig fixed;
    fixed.years = 8;
    fixed.base_papers = 120;
    fixed.refs_mean = 0.0;
    fixed.journal_regime = JournalRegime::fixed_count;
    fixed.journals = 7;
    fixed.seed = 3;
    Corpus cf = generate(fixed);
    YearSeries jf = journal_counts(cf);
    for (std::size_t i = 0; i < jf.size(); ++i) CHECK(jf.value(i) <= 7.0);

    SynthConfig growing = fixed;
    growing.journal_regime = JournalRegime::growing_count;
    growing.journals = 3;
    growing.journals_per_year = 2;
    Corpus cg = generate(growing);
    YearSeries jg = journal_counts(cg);
    for (std::size_t i = 0; i < jg.size(); ++i)
        CHECK(jg.value(i) <= 3.0 + 2.0 * static_cast<double>(i));
    // venue pool actually grows
    bool grew = jg.value(jg.size() - 1) > 3.0;
    CHECK(grew);
}

TEST_CASE("reference peak of a mature cohort sits at the kernel mode") {
    SynthConfig cfg;
    cfg.years = 20;
    cfg.base_papers = 150;
    cfg.growth_rate = 1.05;
    cfg.refs_mean = 12.0;
    cfg.mode_age = 2;
    cfg.decay = 0.4;
    cfg.seed = 21;
    Corpus corpus = generate(cfg);
    CitationMatrix m = citation_counts_matrix(corpus);
    // a cohort far enough from the start that all kernel ages exist
    int y = corpus.year_min() + 15;
    CohortDistribution refs = reference_distribution(m, y);
    PeakStats p = peak_stats(refs, y);
    CHECK(p.peak_delta == -2);
}

TEST_CASE("generated corpora have no duplicate edges or self citations") {
    SynthConfig cfg;
    cfg.years = 10;
    cfg.base_papers = 100;
    cfg.refs_mean = 9.0;
    cfg.seed = 31;
    Corpus corpus = generate(cfg);
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const CitationEdge& e : corpus.edges()) {
        CHECK(e.citing != e.cited);
        CHECK(seen.insert({e.citing, e.cited}).second);
    }
}

TEST_CASE("generate -> write -> load is the identity") {
    SynthConfig cfg;
    cfg.years = 12;
    cfg.base_papers = 90;
    cfg.growth_rate = 1.07;
    cfg.refs_mean = 7.0;
    cfg.journal_regime = JournalRegime::growing_count;
    cfg.journals = 4;
    cfg.journals_per_year = 1;
    cfg.seed = 41;
    Corpus corpus = generate(cfg);

    auto dir = std::filesystem::temp_directory_path() / "citenet_synth_rt";
    std::filesystem::create_directories(dir);
    write_corpus_files(corpus, (dir / "papers.tsv").string(), (dir / "citations.tsv").string());
    auto loaded =
        load_corpus_files((dir / "papers.tsv").string(), (dir / "citations.tsv").string());
    CHECK(loaded.corpus == corpus);
    CHECK(loaded.report.dropped_papers_total() == 0);
    CHECK(loaded.report.dropped_edges_total() == 0);
    CHECK(loaded.report.pre_publication_edge_count == 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("config JSON round trip with defaults") {
    std::string text = R"({
        "years": 6, "base_papers": 40, "growth_rate": 1.02, "refs_mean": 4.5,
        "age_kernel": {"mode_age": 3, "decay": 0.5, "epsilon": 0.01},
        "attachment": "uniform",
        "journal_regime": {"kind": "growing_count", "initial": 5, "per_year": 2},
        "seed": 123
    })";
    SynthConfig cfg = SynthConfig::from_json(text);
    CHECK(cfg.years == 6);
    CHECK(cfg.mode_age == 3);
    CHECK(cfg.attachment == AttachmentRule::uniform);
    CHECK(cfg.journal_regime == JournalRegime::growing_count);
    CHECK(cfg.journals == 5);
    CHECK(cfg.journals_per_year == 2);
    CHECK(cfg.seed == 123);
    CHECK(cfg.start_year == 2000);

    // the canonical form documents the reference-count family and reparses
    std::string canon = cfg.to_json();
    CHECK(canon.find("\"refs_distribution\": \"poisson\"") != std::string::npos);
    SynthConfig again = SynthConfig::from_json(canon);
    CHECK(again.years == cfg.years);
    CHECK(again.seed == cfg.seed);

    CHECK_THROWS_AS(SynthConfig::from_json("{"), Error);
    CHECK_THROWS_AS(SynthConfig::from_json(R"({"years": 0})"), Error);
    CHECK_THROWS_AS(SynthConfig::from_json(R"({"age_kernel": {"epsilon": 0.5}})"), Error);
    CHECK_THROWS_AS(SynthConfig::from_json(R"({"attachment": "magic"})"), Error);
}

TEST_CASE("mean reference count tracks refs_mean") {
    SynthConfig cfg;
    cfg.years = 6;
    cfg.base_papers = 400;
    cfg.growth_rate = 1.0;
    cfg.refs_mean = 5.0;
    cfg.seed = 55;
    GenStats stats;
    generate(cfg, stats);
    double mean = static_cast<double>(stats.refs_requested) /
                  static_cast<double>(stats.papers_created);
    CHECK(mean == doctest::Approx(5.0).epsilon(0.05));
}

TEST_CASE("uniform and preferential attachment differ in concentration") {
    SynthConfig cfg;
    cfg.years = 10;
    cfg.base_papers = 200;
    cfg.growth_rate = 1.0;
    cfg.refs_mean = 10.0;
    cfg.seed = 61;
    cfg.attachment = AttachmentRule::uniform;
    Corpus uniform = generate(cfg);
    cfg.attachment = AttachmentRule::preferential;
    Corpus pref = generate(cfg);

    auto max_indegree = [](const Corpus& c) {
        std::vector<std::uint32_t> deg(c.paper_count(), 0);
        for (const CitationEdge& e : c.edges()) ++deg[e.cited];
        return *std::max_element(deg.begin(), deg.end());
    };
    CHECK(max_indegree(pref) > max_indegree(uniform));
}
