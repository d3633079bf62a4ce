#include "citenet/powerlaw.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "citenet/error.hpp"
#include "citenet/io.hpp"

namespace citenet {

std::string_view to_string(DegreeMode m) {
    return m == DegreeMode::raw ? "raw" : "normalized";
}

double hurwitz_zeta(double s, double a) {
    if (!(s > 1.0)) throw_domain("hurwitz_zeta: requires s > 1");
    if (!(a > 0.0)) throw_domain("hurwitz_zeta: requires a > 0");

    // Sum (a+k)^-s directly until a+k is large enough for the asymptotic
    // tail, then add the Euler-Maclaurin correction about a+N.
    double cutoff = std::max(16.0, 0.5 * s + 8.0);
    double sum = 0.0;
    double n = a;
    while (n < cutoff) {
        sum += std::pow(n, -s);
        n += 1.0;
    }

    // Integral term, half-weight boundary term.
    sum += std::pow(n, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(n, -s);

    // Bernoulli-number corrections: B2, B4, ..., B16.
    static constexpr double kBernoulliOverFactorial[] = {
        1.0 / 12,                       // B2/2!
        -1.0 / 720,                     // B4/4!
        1.0 / 30240,                    // B6/6!
        -1.0 / 1209600,                 // B8/8!
        1.0 / 47900160,                 // B10/10!
        -691.0 / 1307674368000.0,       // B12/12!
        1.0 / 74724249600.0,            // B14/14!
        -3617.0 / 10670622842880000.0,  // B16/16!
    };
    double rising = s;  // (s)_1, then (s)_3, (s)_5, ...
    double power = std::pow(n, -s - 1.0);
    const double inv_n2 = 1.0 / (n * n);
    for (std::size_t i = 0; i < std::size(kBernoulliOverFactorial); ++i) {
        double term = kBernoulliOverFactorial[i] * rising * power;
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-17) break;
        rising *= (s + 2.0 * static_cast<double>(i) + 1.0) *
                  (s + 2.0 * static_cast<double>(i) + 2.0);
        power *= inv_n2;
    }
    return sum;
}

DegreeSample indegree_sample(const Corpus& corpus, int y1, int y2, DegreeMode mode) {
    if (y1 > y2) throw_domain("indegree_sample: y1 > y2");

    // Slot per window paper, in canonical (id) order.
    std::vector<std::uint32_t> slot(corpus.paper_count(), 0xffffffffu);
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < corpus.paper_count(); ++i) {
        int y = corpus.paper(i).year;
        if (y >= y1 && y <= y2) {
            slot[i] = static_cast<std::uint32_t>(members.size());
            members.push_back(i);
        }
    }
    if (members.empty())
        throw_domain("indegree_sample: no papers published in [" + std::to_string(y1) + ", " +
                     std::to_string(y2) + "]");

    std::vector<double> inv_pub;
    int base = 0;
    if (mode == DegreeMode::normalized) {
        base = corpus.year_min();
        inv_pub.resize(static_cast<std::size_t>(corpus.year_max() - base) + 1, 0.0);
        for (int y = corpus.year_min(); y <= corpus.year_max(); ++y) {
            std::size_t n = corpus.papers_in_year(y).size();
            if (n > 0) inv_pub[static_cast<std::size_t>(y - base)] = 1.0 / static_cast<double>(n);
        }
    }

    DegreeSample s;
    s.y1 = y1;
    s.y2 = y2;
    s.mode = mode;
    s.values.assign(members.size(), 0.0);
    for (const CitationEdge& e : corpus.edges()) {
        if (slot[e.cited] == 0xffffffffu) continue;
        int citing_year = corpus.paper(e.citing).year;
        if (citing_year < y1 || citing_year > y2) continue;
        if (mode == DegreeMode::raw)
            s.values[slot[e.cited]] += 1.0;
        else
            s.values[slot[e.cited]] += inv_pub[static_cast<std::size_t>(citing_year - base)];
    }
    return s;
}

DegreeHistogram degree_histogram(const DegreeSample& sample) {
    if (sample.mode != DegreeMode::raw)
        throw_domain("degree_histogram: defined for raw samples only");
    std::map<std::uint64_t, std::uint64_t> freq;
    for (double v : sample.values) ++freq[static_cast<std::uint64_t>(v)];
    DegreeHistogram h;
    const double n = static_cast<double>(sample.values.size());
    h.pmf.reserve(freq.size());
    for (const auto& [k, c] : freq) h.pmf.emplace_back(k, static_cast<double>(c) / n);
    return h;
}

PowerLawFit fit_power_law_discrete(const DegreeSample& sample, std::uint64_t k_min) {
    if (sample.mode != DegreeMode::raw)
        throw_domain("fit_power_law_discrete: requires a raw sample");
    if (k_min < 1) throw_domain("fit_power_law_discrete: k_min must be >= 1");

    double sum_log = 0.0;
    std::size_t n_tail = 0;
    for (double v : sample.values) {
        if (v >= static_cast<double>(k_min)) {
            sum_log += std::log(v);
            ++n_tail;
        }
    }
    if (n_tail < kMinTail)
        throw_domain("fit_power_law_discrete: tail has " + std::to_string(n_tail) +
                     " values, need >= " + std::to_string(kMinTail));

    const double a = static_cast<double>(k_min);
    const double n = static_cast<double>(n_tail);
    auto log_lik = [&](double alpha) {
        return -n * std::log(hurwitz_zeta(alpha, a)) - alpha * sum_log;
    };

    // Golden-section maximization; L is unimodal in alpha (exponential
    // family in -alpha with sufficient statistic ln k).
    constexpr double kGolden = 0.61803398874989484820;
    double lo = 1.0 + 1e-9, hi = kAlphaMax;
    double x1 = hi - kGolden * (hi - lo);
    double x2 = lo + kGolden * (hi - lo);
    double f1 = log_lik(x1), f2 = log_lik(x2);
    while (hi - lo > 1e-10) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kGolden * (hi - lo);
            f2 = log_lik(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kGolden * (hi - lo);
            f1 = log_lik(x1);
        }
    }
    double alpha = 0.5 * (lo + hi);

    PowerLawFit fit;
    fit.k_min = a;
    fit.n_tail = n_tail;
    if (alpha >= kAlphaMax - 1e-6) {
        fit.alpha = kAlphaMax;
        fit.converged = false;
    } else {
        fit.alpha = alpha;
        fit.converged = true;
    }
    fit.log_likelihood = log_lik(fit.alpha);
    return fit;
}

PowerLawFit fit_power_law_continuous(const DegreeSample& sample, double k_min) {
    if (!(k_min > 0.0)) throw_domain("fit_power_law_continuous: k_min must be > 0");

    double sum_log = 0.0;
    std::size_t n_tail = 0;
    for (double v : sample.values) {
        if (v >= k_min) {
            sum_log += std::log(v / k_min);
            ++n_tail;
        }
    }
    if (n_tail < kMinTail)
        throw_domain("fit_power_law_continuous: tail has " + std::to_string(n_tail) +
                     " values, need >= " + std::to_string(kMinTail));
    if (sum_log == 0.0)
        throw_domain("fit_power_law_continuous: all tail values equal k_min");

    const double n = static_cast<double>(n_tail);
    double alpha = 1.0 + n / sum_log;
    PowerLawFit fit;
    fit.k_min = k_min;
    fit.n_tail = n_tail;
    if (alpha > kAlphaMax) {
        fit.alpha = kAlphaMax;
        fit.converged = false;
    } else {
        fit.alpha = alpha;
        fit.converged = true;
    }
    fit.log_likelihood = n * std::log((fit.alpha - 1.0) / k_min) - fit.alpha * sum_log;
    return fit;
}

PowerLawFit fit_power_law_continuous(const DegreeSample& sample) {
    double k_min = 0.0;
    for (double v : sample.values)
        if (v > 0.0 && (k_min == 0.0 || v < k_min)) k_min = v;
    if (k_min == 0.0)
        throw_domain("fit_power_law_continuous: sample has no positive values");
    return fit_power_law_continuous(sample, k_min);
}

YearSeries ExponentSeries::alpha_series() const {
    std::vector<std::pair<int, double>> pts;
    pts.reserve(fits.size());
    for (const auto& [center, fit] : fits) pts.emplace_back(center, fit.alpha);
    return YearSeries(std::move(pts));
}

void ExponentSeries::write_csv(std::ostream& out) const {
    out << "center_year,mode,alpha,k_min,n_tail,converged\n";
    for (const auto& [center, fit] : fits) {
        out << center << ',' << to_string(mode) << ',' << format_number(fit.alpha) << ','
            << format_number(fit.k_min) << ',' << fit.n_tail << ','
            << (fit.converged ? "true" : "false") << '\n';
    }
}

ExponentSeries exponent_sweep(const Corpus& corpus, std::span<const int> centers, int half_width,
                              DegreeMode mode, std::optional<double> k_min) {
    if (centers.empty()) throw_domain("exponent_sweep: empty centers list");
    if (half_width < 0) throw_domain("exponent_sweep: negative half_width");

    std::vector<int> sorted(centers.begin(), centers.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    if (k_min.has_value()) {
        if (mode == DegreeMode::raw &&
            (*k_min < 1.0 || *k_min != std::floor(*k_min)))
            throw_domain("exponent_sweep: raw mode needs an integer k_min >= 1");
        if (mode == DegreeMode::normalized && !(*k_min > 0.0))
            throw_domain("exponent_sweep: normalized mode needs k_min > 0");
    }

    ExponentSeries series;
    series.mode = mode;
    series.half_width = half_width;
    for (int c : sorted) {
        try {
            DegreeSample s = indegree_sample(corpus, c - half_width, c + half_width, mode);
            PowerLawFit fit;
            if (mode == DegreeMode::raw)
                fit = fit_power_law_discrete(s, k_min ? static_cast<std::uint64_t>(*k_min) : 1u);
            else
                fit = k_min ? fit_power_law_continuous(s, *k_min) : fit_power_law_continuous(s);
            series.fits.emplace_back(c, fit);
        } catch (const Error& e) {
            series.absent.emplace_back(c, e.what());
        }
    }
    return series;
}

}  // namespace citenet
