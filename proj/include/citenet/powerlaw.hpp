#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "citenet/corpus.hpp"
#include "citenet/counts.hpp"

namespace citenet {

enum class DegreeMode : std::uint8_t { raw, normalized };
std::string_view to_string(DegreeMode m);

/// Per-paper in-degrees over the window [y1, y2]: only citations whose
/// citing paper is also published inside the window count. One value per
/// paper published in the window, zeros included. Raw values are integers;
/// normalized values weight each citation by 1/n_y for its citing year's
/// full-corpus publication count.
struct DegreeSample {
    int y1 = 0;
    int y2 = 0;
    DegreeMode mode = DegreeMode::raw;
    std::vector<double> values;

    std::size_t n_papers() const { return values.size(); }
};

struct DegreeHistogram {
    std::vector<std::pair<std::uint64_t, double>> pmf;  // k -> P(k), increasing k
};

struct PowerLawFit {
    double alpha = 0.0;
    double k_min = 0.0;
    std::size_t n_tail = 0;
    double log_likelihood = 0.0;
    bool converged = false;
};

/// Optimizer bracket cap and the smallest tail worth fitting.
inline constexpr double kAlphaMax = 20.0;
inline constexpr std::size_t kMinTail = 10;

/// Hurwitz zeta for s > 1, a > 0: direct summation with an Euler-Maclaurin
/// tail correction, accurate to ~1e-14 relative.
double hurwitz_zeta(double s, double a);

DegreeSample indegree_sample(const Corpus& corpus, int y1, int y2, DegreeMode mode);

/// Empirical mass function of a raw sample, k = 0 included.
DegreeHistogram degree_histogram(const DegreeSample& sample);

/// Discrete power-law MLE over values >= k_min: maximizes
///   L(a) = -n ln zeta(a, k_min) - a * sum(ln k)
/// by golden-section search on (1, kAlphaMax]. A maximum at the bracket
/// edge is reported as alpha = kAlphaMax with converged = false.
PowerLawFit fit_power_law_discrete(const DegreeSample& sample, std::uint64_t k_min = 1);

/// Continuous (Hill) estimator: alpha = 1 + n / sum(ln(k / k_min)).
PowerLawFit fit_power_law_continuous(const DegreeSample& sample, double k_min);

/// Same, with k_min defaulting to the smallest positive sample value.
PowerLawFit fit_power_law_continuous(const DegreeSample& sample);

/// Exponent estimates at each window center, in increasing center order.
/// Windows are [c - half_width, c + half_width] inclusive. Centers whose
/// sample or fit fails are recorded in `absent` with a reason.
struct ExponentSeries {
    DegreeMode mode = DegreeMode::raw;
    int half_width = 5;
    std::vector<std::pair<int, PowerLawFit>> fits;
    std::vector<std::pair<int, std::string>> absent;

    /// center -> alpha as a YearSeries (for the densification trend fit).
    YearSeries alpha_series() const;
    /// CSV: center_year,mode,alpha,k_min,n_tail,converged
    void write_csv(std::ostream& out) const;
};

/// Raw mode uses the discrete fitter (k_min defaults to 1); normalized mode
/// uses the continuous fitter (k_min defaults per window to the smallest
/// positive degree).
ExponentSeries exponent_sweep(const Corpus& corpus, std::span<const int> centers,
                              int half_width, DegreeMode mode,
                              std::optional<double> k_min = std::nullopt);

}  // namespace citenet
