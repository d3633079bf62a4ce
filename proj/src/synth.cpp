#include "citenet/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include <json.hpp>

#include "citenet/error.hpp"

namespace citenet {

namespace {

// All draws go through this wrapper so the generated corpus is a pure
// function of the seed, independent of the standard library's distribution
// implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    std::uint32_t below(std::uint32_t n) {
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(eng_()) * n) >> 64);
    }

    // Inversion by sequential search; fine for the means allowed here.
    std::uint32_t poisson(double mean) {
        if (mean <= 0.0) return 0;
        double u = uniform01();
        double p = std::exp(-mean);
        double cum = p;
        std::uint32_t k = 0;
        while (u > cum && k < 1000000) {
            ++k;
            p *= mean / static_cast<double>(k);
            cum += p;
        }
        return k;
    }

private:
    std::mt19937_64 eng_;
};

std::string padded_id(char prefix, std::uint64_t value, int width) {
    char buf[32];
    width = std::clamp(width, 1, 20);
    std::snprintf(buf, sizeof(buf), "%c%0*llu", prefix, width,
                  static_cast<unsigned long long>(value));
    return buf;
}

}  // namespace

void SynthConfig::validate() const {
    if (years < 1) throw_domain("synth config: years must be >= 1");
    if (base_papers < 1) throw_domain("synth config: base_papers must be >= 1");
    if (growth_rate < 1.0) throw_domain("synth config: growth_rate must be >= 1");
    if (refs_mean < 0.0 || refs_mean > 500.0)
        throw_domain("synth config: refs_mean must be in [0, 500]");
    if (mode_age < 0) throw_domain("synth config: mode_age must be >= 0");
    if (!(decay > 0.0)) throw_domain("synth config: decay must be > 0");
    if (epsilon < 0.0 || epsilon > 0.05)
        throw_domain("synth config: epsilon must be in [0, 0.05]");
    if (journals < 1) throw_domain("synth config: journals must be >= 1");
    if (journals_per_year < 0) throw_domain("synth config: journals_per_year must be >= 0");
    if (start_year < 1900 || start_year + years - 1 > 2100)
        throw_domain("synth config: years must fall within [1900, 2100]");

    double total = 0.0;
    for (int t = 0; t < years; ++t)
        total += std::round(static_cast<double>(base_papers) * std::pow(growth_rate, t));
    if (total > 5e7) throw_domain("synth config: would generate more than 5e7 papers");
}

SynthConfig SynthConfig::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw_parse(std::string("synth config: ") + e.what());
    }
    SynthConfig c;
    try {
        c.years = j.value("years", c.years);
        c.base_papers = j.value("base_papers", c.base_papers);
        c.growth_rate = j.value("growth_rate", c.growth_rate);
        c.refs_mean = j.value("refs_mean", c.refs_mean);
        if (j.contains("age_kernel")) {
            const auto& k = j.at("age_kernel");
            c.mode_age = k.value("mode_age", c.mode_age);
            c.decay = k.value("decay", c.decay);
            c.epsilon = k.value("epsilon", c.epsilon);
        }
        if (j.contains("attachment")) {
            std::string a = j.at("attachment").get<std::string>();
            if (a == "uniform")
                c.attachment = AttachmentRule::uniform;
            else if (a == "preferential")
                c.attachment = AttachmentRule::preferential;
            else
                throw_parse("synth config: unknown attachment '" + a + "'");
        }
        if (j.contains("journal_regime")) {
            const auto& r = j.at("journal_regime");
            std::string kind = r.value("kind", std::string("fixed_count"));
            if (kind == "fixed_count") {
                c.journal_regime = JournalRegime::fixed_count;
                c.journals = r.value("journals", c.journals);
                c.journals_per_year = 0;
            } else if (kind == "growing_count") {
                c.journal_regime = JournalRegime::growing_count;
                c.journals = r.value("initial", c.journals);
                c.journals_per_year = r.value("per_year", 1);
            } else {
                throw_parse("synth config: unknown journal_regime kind '" + kind + "'");
            }
        }
        c.seed = j.value("seed", c.seed);
        c.start_year = j.value("start_year", c.start_year);
    } catch (const nlohmann::json::exception& e) {
        throw_parse(std::string("synth config: ") + e.what());
    }
    c.validate();
    return c;
}

std::string SynthConfig::to_json() const {
    nlohmann::json j;
    j["years"] = years;
    j["base_papers"] = base_papers;
    j["growth_rate"] = growth_rate;
    j["refs_mean"] = refs_mean;
    j["refs_distribution"] = "poisson";
    j["age_kernel"] = {{"mode_age", mode_age}, {"decay", decay}, {"epsilon", epsilon}};
    j["attachment"] = attachment == AttachmentRule::uniform ? "uniform" : "preferential";
    if (journal_regime == JournalRegime::fixed_count)
        j["journal_regime"] = {{"kind", "fixed_count"}, {"journals", journals}};
    else
        j["journal_regime"] = {{"kind", "growing_count"},
                               {"initial", journals},
                               {"per_year", journals_per_year}};
    j["seed"] = seed;
    j["start_year"] = start_year;
    return j.dump(2) + "\n";
}

Corpus generate(const SynthConfig& config, GenStats& stats) {
    config.validate();
    stats = GenStats{};
    Rng rng(config.seed);

    const int T = config.years;
    std::vector<std::uint32_t> cohort_size(static_cast<std::size_t>(T));
    std::vector<std::uint32_t> cohort_start(static_cast<std::size_t>(T) + 1, 0);
    for (int t = 0; t < T; ++t) {
        cohort_size[t] = static_cast<std::uint32_t>(
            std::llround(static_cast<double>(config.base_papers) *
                         std::pow(config.growth_rate, t)));
        cohort_start[t + 1] = cohort_start[t] + cohort_size[t];
    }
    const std::uint32_t total = cohort_start[T];
    stats.papers_created = total;

    int id_width = 1;
    for (std::uint32_t v = total; v >= 10; v /= 10) ++id_width;
    int venue_cap = config.journal_regime == JournalRegime::fixed_count
                        ? config.journals
                        : config.journals + config.journals_per_year * (T - 1);
    int venue_width = 1;
    for (int v = venue_cap; v >= 10; v /= 10) ++venue_width;

    std::vector<PaperRecord> papers;
    papers.reserve(total);
    for (int t = 0; t < T; ++t) {
        std::uint32_t venue_count =
            config.journal_regime == JournalRegime::fixed_count
                ? static_cast<std::uint32_t>(config.journals)
                : static_cast<std::uint32_t>(config.journals + config.journals_per_year * t);
        for (std::uint32_t i = 0; i < cohort_size[t]; ++i) {
            PaperRecord p;
            p.id = padded_id('p', papers.size(), id_width);
            p.year = config.start_year + t;
            p.venue = padded_id('v', rng.below(venue_count), venue_width);
            p.doc_type = DocType::article;
            papers.push_back(std::move(p));
        }
    }

    // Attachment urns: each paper appears once (the +1), plus once per
    // received citation.
    const bool preferential = config.attachment == AttachmentRule::preferential;
    std::vector<std::vector<std::uint32_t>> slots;
    if (preferential) {
        slots.resize(static_cast<std::size_t>(T) + 1);
        for (int t = 0; t < T; ++t) {
            slots[t].reserve(cohort_size[t] * 2);
            for (std::uint32_t i = 0; i < cohort_size[t]; ++i)
                slots[t].push_back(cohort_start[t] + i);
        }
    }

    // Age weights exp(-decay * |a - mode_age|), truncated to the ages that
    // exist in year t; cumulative form for sampling by binary search.
    std::vector<double> cum;

    std::vector<CitationEdge> edges;
    edges.reserve(static_cast<std::size_t>(static_cast<double>(total) * config.refs_mean * 1.05));
    std::vector<std::uint32_t> chosen;

    for (int t = 0; t < T; ++t) {
        cum.resize(static_cast<std::size_t>(t) + 1);
        double acc = 0.0;
        for (int a = 0; a <= t; ++a) {
            acc += std::exp(-config.decay * std::abs(a - config.mode_age));
            cum[a] = acc;
        }
        const double kernel_total = acc;
        const bool eps_open = config.epsilon > 0.0 && t + 1 < T;

        for (std::uint32_t i = 0; i < cohort_size[t]; ++i) {
            const std::uint32_t citer = cohort_start[t] + i;
            const std::uint32_t n_refs = rng.poisson(config.refs_mean);
            stats.refs_requested += n_refs;
            chosen.clear();
            for (std::uint32_t r = 0; r < n_refs; ++r) {
                int cohort;
                if (eps_open && rng.uniform01() < config.epsilon) {
                    cohort = t + 1;
                } else {
                    double u = rng.uniform01() * kernel_total;
                    int a = static_cast<int>(
                        std::lower_bound(cum.begin(), cum.end(), u) - cum.begin());
                    if (a > t) a = t;
                    cohort = t - a;
                }
                std::uint32_t target;
                if (preferential) {
                    const auto& urn = slots[cohort];
                    target = urn[rng.below(static_cast<std::uint32_t>(urn.size()))];
                } else {
                    target = cohort_start[cohort] + rng.below(cohort_size[cohort]);
                }
                if (target == citer) {
                    ++stats.dropped_self_target;
                    continue;
                }
                if (std::find(chosen.begin(), chosen.end(), target) != chosen.end()) {
                    ++stats.dropped_duplicate_target;
                    continue;
                }
                chosen.push_back(target);
                edges.push_back({citer, target});
                if (preferential) slots[cohort].push_back(target);
            }
        }
    }
    stats.edges_created = edges.size();
    return Corpus::from_parts(std::move(papers), std::move(edges));
}

Corpus generate(const SynthConfig& config) {
    GenStats stats;
    return generate(config, stats);
}

}  // namespace citenet
