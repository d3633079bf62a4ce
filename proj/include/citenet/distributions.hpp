#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "citenet/corpus.hpp"
#include "citenet/counts.hpp"

namespace citenet {

/// Citation counts by (cited year, citing year). Only pairs with
/// citing >= cited - 1 are stored; earlier citing years (deeper
/// pre-publication citations) accumulate in excluded_pre_publication().
class CitationMatrix {
public:
    CitationMatrix() = default;
    CitationMatrix(int year_min, int year_max);

    std::uint64_t at(int cited_year, int citing_year) const;
    void add(int cited_year, int citing_year, std::uint64_t n = 1);

    int year_min() const { return year_min_; }
    int year_max() const { return year_max_; }
    std::uint64_t excluded_pre_publication() const { return excluded_; }
    /// Sum over all stored cells.
    std::uint64_t total() const { return total_; }

private:
    int year_min_ = 0;
    int year_max_ = -1;
    std::size_t span_ = 0;
    std::vector<std::uint64_t> cells_;  // dense [cited][citing]
    std::uint64_t excluded_ = 0;
    std::uint64_t total_ = 0;
};

CitationMatrix citation_counts_matrix(const Corpus& corpus);

enum class DistributionKind : std::uint8_t { citation, normalized_citation, reference };
std::string_view to_string(DistributionKind k);

/// A per-cohort probability distribution over years (or over offsets once
/// aligned). Probabilities sum to 1.
struct CohortDistribution {
    int cohort_year = 0;
    DistributionKind kind = DistributionKind::citation;
    bool aligned = false;
    std::vector<int> support;        // increasing years; offsets when aligned
    std::vector<double> probability;

    std::size_t size() const { return support.size(); }
};

/// P_y(x): share of cohort y's incoming citations arriving from papers
/// published in year x. Errors on a cohort with no incoming citations.
CohortDistribution citation_distribution(const CitationMatrix& matrix, int year);

/// Same, with each citing year's count divided by that year's publication
/// count before renormalizing.
CohortDistribution normalized_citation_distribution(const CitationMatrix& matrix,
                                                    const YearSeries& pub_counts, int year);

/// R_y(x): share of cohort y's outgoing references pointing at papers
/// published in year x. Errors on a cohort with no outgoing references.
CohortDistribution reference_distribution(const CitationMatrix& matrix, int year);

struct PeakStats {
    int peak_year = 0;
    double peak_value = 0.0;
    int peak_delta = 0;  // peak_year - anchor_year
};

/// Ties break toward the year closest to the anchor, then the earliest.
PeakStats peak_stats(const CohortDistribution& dist, int anchor_year);

/// Shifts the support so the peak sits at offset 0. Idempotent.
CohortDistribution align_to_peak(const CohortDistribution& dist);

/// CSV for one or more distributions:
/// cohort_year,kind,x,probability (aligned form uses `offset` over `x`).
void write_distributions_csv(std::span<const CohortDistribution> dists, std::ostream& out);

}  // namespace citenet
