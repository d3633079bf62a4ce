#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "citenet/counts.hpp"
#include "citenet/error.hpp"
#include "oracles.hpp"

using namespace citenet;

namespace {

YearSeries series_of(std::vector<std::pair<int, double>> pts) { return YearSeries(std::move(pts)); }

}  // namespace

TEST_CASE("publication counts cover the full year range with zeros") {
    auto papers = oracle::papers_text(
        {{"A", 2000, "V1", "article"}, {"B", 2003, "V2", "article"}});
    auto [corpus, report] = oracle::load_from_text(papers, "");
    YearSeries pubs = publication_counts(corpus);
    CHECK(pubs.size() == 4);
    CHECK(pubs.at(2000) == 1.0);
    CHECK(pubs.at(2001) == 0.0);
    CHECK(pubs.at(2002) == 0.0);
    CHECK(pubs.at(2003) == 1.0);
}

TEST_CASE("publication and journal counts match brute-force recounts") {
    for (unsigned seed : {1u, 2u, 3u}) {
        auto [corpus, report] = oracle::random_corpus(1000, 0, 1990, 12, seed);
        YearSeries pubs = publication_counts(corpus);
        YearSeries journals = journal_counts(corpus);
        auto pubs_ref = oracle::recount_publications(corpus);
        auto journals_ref = oracle::recount_journals(corpus);
        REQUIRE(pubs.size() == pubs_ref.size());
        double total = 0.0;
        for (std::size_t i = 0; i < pubs.size(); ++i) {
            CHECK(pubs.value(i) == pubs_ref.at(pubs.year(i)));
            CHECK(journals.value(i) == journals_ref.at(journals.year(i)));
            CHECK(journals.value(i) <= pubs.value(i));
            total += pubs.value(i);
        }
        CHECK(total == static_cast<double>(corpus.paper_count()));
    }
}

TEST_CASE("journal counts count distinct venues") {
    auto papers = oracle::papers_text({{"A", 2000, "V1", "article"},
                                       {"B", 2000, "V1", "article"},
                                       {"C", 2000, "V2", "article"}});
    auto [corpus, report] = oracle::load_from_text(papers, "");
    YearSeries journals = journal_counts(corpus);
    CHECK(journals.size() == 1);
    CHECK(journals.at(2000) == 2.0);
}

TEST_CASE("counts error on an empty corpus") {
    auto [corpus, report] = oracle::load_from_text("", "");
    CHECK_THROWS_AS(publication_counts(corpus), Error);
    CHECK_THROWS_AS(journal_counts(corpus), Error);
}

TEST_CASE("linear fit of a constant series") {
    LineFit fit = fit_linear(series_of({{2000, 10}, {2001, 10}, {2002, 10}}));
    CHECK(fit.slope == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(fit.r_squared == 1.0);
}

TEST_CASE("linear fit through two points") {
    LineFit fit = fit_linear(series_of({{2000, 50}, {2010, 450}}));
    CHECK(fit.slope == doctest::Approx(40.0).epsilon(1e-12));
    CHECK(fit.r_squared == doctest::Approx(1.0));
}

TEST_CASE("linear fit matches the normal-equation oracle on noisy data") {
    std::mt19937 rng(11);
    std::normal_distribution<double> noise(0.0, 5.0);
    std::vector<std::pair<int, double>> pts;
    std::vector<double> xs, ys;
    for (int y = 1980; y <= 2010; ++y) {
        double v = 100.0 + 12.5 * (y - 1980) + noise(rng);
        v = std::max(v, 0.0);
        pts.emplace_back(y, v);
        xs.push_back(y);
        ys.push_back(v);
    }
    LineFit fit = fit_linear(series_of(std::move(pts)));
    auto ref = oracle::ols_normal_equations(xs, ys);
    CHECK(fit.slope == doctest::Approx(ref.slope).epsilon(1e-9));
    CHECK(fit.intercept == doctest::Approx(ref.intercept).epsilon(1e-9));
    CHECK(fit.r_squared == doctest::Approx(ref.r_squared).epsilon(1e-9));
}

TEST_CASE("linear fit is equivariant under a constant shift") {
    auto base = series_of({{2000, 3}, {2001, 9}, {2002, 4}, {2004, 12}});
    std::vector<std::pair<int, double>> shifted_pts;
    for (auto [y, v] : base.points()) shifted_pts.emplace_back(y, v + 100.0);
    LineFit f0 = fit_linear(base);
    LineFit f1 = fit_linear(series_of(std::move(shifted_pts)));
    CHECK(f1.slope == doctest::Approx(f0.slope).epsilon(1e-12));
    CHECK(f1.intercept == doctest::Approx(f0.intercept + 100.0).epsilon(1e-12));
}

TEST_CASE("exponential fit recovers an exact exponential") {
    std::vector<std::pair<int, double>> pts;
    for (int y = 2000; y <= 2010; ++y) pts.emplace_back(y, 100.0 * std::pow(1.1, y - 2000));
    ExpFit fit = fit_exponential(series_of(std::move(pts)));
    CHECK(fit.growth_rate == doctest::Approx(1.1).epsilon(1e-9));
    CHECK(fit.amplitude == doctest::Approx(100.0).epsilon(1e-9));
    CHECK(fit.r_squared_log == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exponential fit rejects zero counts") {
    CHECK_THROWS_AS(fit_exponential(series_of({{2000, 10}, {2001, 0}, {2002, 12}})), Error);
}

TEST_CASE("exponential fit matches the log-space normal-equation oracle") {
    std::mt19937 rng(13);
    std::normal_distribution<double> noise(0.0, 0.05);
    std::vector<std::pair<int, double>> pts;
    std::vector<double> xs, ys;
    for (int y = 1990; y <= 2015; ++y) {
        double v = 80.0 * std::pow(1.07, y - 1990) * std::exp(noise(rng));
        pts.emplace_back(y, v);
        xs.push_back(y);
        ys.push_back(std::log(v));
    }
    ExpFit fit = fit_exponential(series_of(std::move(pts)));
    auto ref = oracle::ols_normal_equations(xs, ys);
    CHECK(fit.growth_rate == doctest::Approx(std::exp(ref.slope)).epsilon(1e-9));
    CHECK(fit.amplitude ==
          doctest::Approx(std::exp(ref.intercept + ref.slope * 1990.0)).epsilon(1e-9));
    CHECK(fit.r_squared_log == doctest::Approx(ref.r_squared).epsilon(1e-9));
}

TEST_CASE("scaling counts scales the exponential amplitude only") {
    std::vector<std::pair<int, double>> pts, scaled;
    std::mt19937 rng(17);
    for (int y = 2000; y <= 2012; ++y) {
        double v = 50.0 * std::pow(1.05, y - 2000) + static_cast<double>(rng() % 7);
        pts.emplace_back(y, v);
        scaled.emplace_back(y, 3.0 * v);
    }
    ExpFit f0 = fit_exponential(series_of(std::move(pts)));
    ExpFit f1 = fit_exponential(series_of(std::move(scaled)));
    CHECK(f1.growth_rate == doctest::Approx(f0.growth_rate).epsilon(1e-12));
    CHECK(f1.amplitude == doctest::Approx(3.0 * f0.amplitude).epsilon(1e-12));
}

TEST_CASE("fits need at least two points") {
    CHECK_THROWS_AS(fit_linear(series_of({{2000, 1}})), Error);
    CHECK_THROWS_AS(fit_exponential(series_of({{2000, 1}})), Error);
}

TEST_CASE("year series validates its invariants") {
    CHECK_THROWS_AS(series_of({{2001, 1}, {2000, 2}}), Error);
    CHECK_THROWS_AS(series_of({{2000, 1}, {2000, 2}}), Error);
    CHECK_THROWS_AS(series_of({{2000, -1}}), Error);
}

TEST_CASE("year series CSV and sampling") {
    auto s = series_of({{2000, 3}, {2001, 4.5}, {2002, 5}, {2003, 0}, {2004, 6}});
    CHECK(s.to_csv() == "year,count\n2000,3\n2001,4.5\n2002,5\n2003,0\n2004,6\n");
    YearSeries every2 = s.sampled(2);
    CHECK(every2.size() == 3);
    CHECK(every2.year(1) == 2002);
    YearSeries positive = s.positive_only();
    CHECK(positive.size() == 4);
}
