#pragma once

#include <cstdint>
#include <string>

#include "citenet/corpus.hpp"

namespace citenet {

enum class AttachmentRule : std::uint8_t { uniform, preferential };
enum class JournalRegime : std::uint8_t { fixed_count, growing_count };

/// Configuration of the growing-corpus generator. Cohort t (t = 0..years-1)
/// holds round(base_papers * growth_rate^t) papers published in
/// start_year + t. Each paper draws a Poisson(refs_mean) reference count;
/// each reference picks an age a with weight exp(-decay * |a - mode_age|)
/// over the ages available that year, except that with probability epsilon
/// it cites the following year's cohort (age -1, the pre-publication
/// channel). Within the chosen cohort the target is uniform, or
/// proportional to in-degree + 1 under preferential attachment.
struct SynthConfig {
    int years = 40;
    int base_papers = 300;
    double growth_rate = 1.12;
    double refs_mean = 10.0;
    int mode_age = 2;
    double decay = 0.4;
    double epsilon = 0.02;
    AttachmentRule attachment = AttachmentRule::preferential;
    JournalRegime journal_regime = JournalRegime::fixed_count;
    int journals = 50;           // fixed count, or the initial count
    int journals_per_year = 0;   // growth of the venue pool per year
    std::uint64_t seed = 1;
    int start_year = 2000;

    void validate() const;

    static SynthConfig from_json(const std::string& text);
    /// Canonical effective config, including the reference-count
    /// distribution family ("poisson"), which is an implementation constant.
    std::string to_json() const;
};

struct GenStats {
    std::uint64_t papers_created = 0;
    std::uint64_t refs_requested = 0;
    std::uint64_t edges_created = 0;
    /// Draws rejected because the citer already cited the chosen target;
    /// rejected draws are dropped, not redirected into other years.
    std::uint64_t dropped_duplicate_target = 0;
    std::uint64_t dropped_self_target = 0;
};

/// Fully deterministic for a given config (including the seed).
Corpus generate(const SynthConfig& config, GenStats& stats);
Corpus generate(const SynthConfig& config);

}  // namespace citenet
