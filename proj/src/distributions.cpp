#include "citenet/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "citenet/error.hpp"
#include "citenet/io.hpp"

namespace citenet {

CitationMatrix::CitationMatrix(int year_min, int year_max)
    : year_min_(year_min), year_max_(year_max) {
    if (year_max_ >= year_min_) {
        span_ = static_cast<std::size_t>(year_max_ - year_min_) + 1;
        cells_.assign(span_ * span_, 0);
    }
}

std::uint64_t CitationMatrix::at(int cited_year, int citing_year) const {
    if (cited_year < year_min_ || cited_year > year_max_ || citing_year < year_min_ ||
        citing_year > year_max_)
        return 0;
    return cells_[static_cast<std::size_t>(cited_year - year_min_) * span_ +
                  static_cast<std::size_t>(citing_year - year_min_)];
}

void CitationMatrix::add(int cited_year, int citing_year, std::uint64_t n) {
    if (citing_year < cited_year - 1) {
        excluded_ += n;
        return;
    }
    if (cited_year < year_min_ || cited_year > year_max_ || citing_year < year_min_ ||
        citing_year > year_max_)
        throw_domain("citation matrix: year outside range");
    cells_[static_cast<std::size_t>(cited_year - year_min_) * span_ +
           static_cast<std::size_t>(citing_year - year_min_)] += n;
    total_ += n;
}

CitationMatrix citation_counts_matrix(const Corpus& corpus) {
    CitationMatrix m(corpus.year_min(), corpus.year_max());
    for (const CitationEdge& e : corpus.edges())
        m.add(corpus.paper(e.cited).year, corpus.paper(e.citing).year);
    return m;
}

std::string_view to_string(DistributionKind k) {
    switch (k) {
        case DistributionKind::citation: return "citation";
        case DistributionKind::normalized_citation: return "normalized_citation";
        case DistributionKind::reference: return "reference";
    }
    return "citation";
}

namespace {

CohortDistribution normalize(int cohort_year, DistributionKind kind, std::vector<int> support,
                             std::vector<double> weights) {
    double sum = 0.0;
    for (double w : weights) sum += w;
    for (double& w : weights) w /= sum;
    CohortDistribution d;
    d.cohort_year = cohort_year;
    d.kind = kind;
    d.support = std::move(support);
    d.probability = std::move(weights);
    return d;
}

}  // namespace

CohortDistribution citation_distribution(const CitationMatrix& matrix, int year) {
    std::vector<int> support;
    std::vector<double> weights;
    for (int x = std::max(matrix.year_min(), year - 1); x <= matrix.year_max(); ++x) {
        std::uint64_t n = matrix.at(year, x);
        if (n > 0) {
            support.push_back(x);
            weights.push_back(static_cast<double>(n));
        }
    }
    if (support.empty())
        throw_domain("citation_distribution: cohort " + std::to_string(year) +
                     " has no incoming citations");
    return normalize(year, DistributionKind::citation, std::move(support), std::move(weights));
}

CohortDistribution normalized_citation_distribution(const CitationMatrix& matrix,
                                                    const YearSeries& pub_counts, int year) {
    std::vector<int> support;
    std::vector<double> weights;
    for (int x = std::max(matrix.year_min(), year - 1); x <= matrix.year_max(); ++x) {
        std::uint64_t n = matrix.at(year, x);
        if (n == 0) continue;
        auto n_x = pub_counts.at(x);
        if (!n_x.has_value() || *n_x <= 0.0)
            throw_domain("normalized_citation_distribution: citing year " + std::to_string(x) +
                         " has citations but no publications");
        support.push_back(x);
        weights.push_back(static_cast<double>(n) / *n_x);
    }
    if (support.empty())
        throw_domain("normalized_citation_distribution: cohort " + std::to_string(year) +
                     " has no incoming citations");
    return normalize(year, DistributionKind::normalized_citation, std::move(support),
                     std::move(weights));
}

CohortDistribution reference_distribution(const CitationMatrix& matrix, int year) {
    std::vector<int> support;
    std::vector<double> weights;
    // Slice the matrix along the citing axis: counts n_x^y for cited years x.
    // Stored cells already satisfy x <= citing + 1.
    for (int x = matrix.year_min(); x <= std::min(matrix.year_max(), year + 1); ++x) {
        std::uint64_t n = matrix.at(x, year);
        if (n > 0) {
            support.push_back(x);
            weights.push_back(static_cast<double>(n));
        }
    }
    if (support.empty())
        throw_domain("reference_distribution: cohort " + std::to_string(year) +
                     " has no outgoing references");
    return normalize(year, DistributionKind::reference, std::move(support), std::move(weights));
}

PeakStats peak_stats(const CohortDistribution& dist, int anchor_year) {
    if (dist.support.empty()) throw_domain("peak_stats: empty distribution");
    std::size_t best = 0;
    for (std::size_t i = 1; i < dist.support.size(); ++i) {
        double p = dist.probability[i];
        double bp = dist.probability[best];
        if (p > bp) {
            best = i;
        } else if (p == bp) {
            int d_new = std::abs(dist.support[i] - anchor_year);
            int d_best = std::abs(dist.support[best] - anchor_year);
            if (d_new < d_best || (d_new == d_best && dist.support[i] < dist.support[best]))
                best = i;
        }
    }
    PeakStats s;
    s.peak_year = dist.support[best];
    s.peak_value = dist.probability[best];
    s.peak_delta = s.peak_year - anchor_year;
    return s;
}

CohortDistribution align_to_peak(const CohortDistribution& dist) {
    if (dist.support.empty()) throw_domain("align_to_peak: empty distribution");
    // Anchor at the publication year (offset 0 once aligned) so repeated
    // alignment is a no-op.
    PeakStats peak = peak_stats(dist, dist.aligned ? 0 : dist.cohort_year);
    CohortDistribution out = dist;
    out.aligned = true;
    for (int& x : out.support) x -= peak.peak_year;
    return out;
}

void write_distributions_csv(std::span<const CohortDistribution> dists, std::ostream& out) {
    bool aligned = !dists.empty() && dists.front().aligned;
    out << (aligned ? "cohort_year,kind,offset,probability\n" : "cohort_year,kind,x,probability\n");
    for (const CohortDistribution& d : dists) {
        for (std::size_t i = 0; i < d.size(); ++i) {
            out << d.cohort_year << ',' << to_string(d.kind) << ',' << d.support[i] << ','
                << format_number(d.probability[i]) << '\n';
        }
    }
}

}  // namespace citenet
