#include "qdm/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace qdm {

namespace {

double log_binomial_pmf(int k, int n, double p0) {
    double log_pmf = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    if (k > 0) log_pmf += k * std::log(p0);
    if (n - k > 0) log_pmf += (n - k) * std::log1p(-p0);
    return log_pmf;
}

/// log(sum exp(terms)) with compensated summation of the scaled terms.
double log_sum_exp(const std::vector<double>& log_terms) {
    if (log_terms.empty()) return -std::numeric_limits<double>::infinity();
    const double m = *std::max_element(log_terms.begin(), log_terms.end());
    double sum = 0.0, comp = 0.0;
    for (double lt : log_terms) {
        const double term = std::exp(lt - m);
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return m + std::log(sum);
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

void ChoiceDataset::validate() const {
    int total = 0;
    for (const auto& [pattern, count] : counts) {
        require(!pattern.empty(), "ChoiceDataset: empty pattern label");
        require(count >= 0, "ChoiceDataset: negative count for pattern " + pattern);
        total += count;
    }
    require(total == n_respondents, "ChoiceDataset: counts must sum to n_respondents");
}

RateResult preference_rate(const ChoiceDataset& data, const std::string& preferred_marker) {
    data.validate();
    require(!preferred_marker.empty(), "preference_rate: empty marker");
    std::vector<std::string> alternatives;
    std::size_t start = 0;
    while (true) {
        const std::size_t bar = preferred_marker.find('|', start);
        alternatives.push_back(preferred_marker.substr(start, bar - start));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }

    RateResult result;
    result.denominator = data.n_respondents;
    bool any_match = false;
    for (const auto& [pattern, count] : data.counts) {
        const bool matches = std::any_of(
            alternatives.begin(), alternatives.end(), [&pattern](const std::string& alt) {
                return !alt.empty() && pattern.find(alt) != std::string::npos;
            });
        if (matches) {
            any_match = true;
            result.numerator += count;
        }
    }
    require(any_match, "preference_rate: marker '" + preferred_marker +
                           "' matches no choice pattern");
    result.rate = static_cast<double>(result.numerator) / result.denominator;
    result.p_value = exact_binomial(result.numerator, result.denominator, 0.5, Sided::Two);
    result.test = "exact binomial, two-sided, null p=0.5";
    return result;
}

double exact_binomial(int k, int n, double p0, Sided sided) {
    require(n >= 1, "exact_binomial: n must be >= 1");
    require(k >= 0 && k <= n, "exact_binomial: k must lie in [0, n]");
    require(p0 > 0.0 && p0 < 1.0, "exact_binomial: p0 must lie in (0,1)");

    std::vector<double> log_pmf(n + 1);
    for (int j = 0; j <= n; ++j) log_pmf[j] = log_binomial_pmf(j, n, p0);

    std::vector<double> tail;
    if (sided == Sided::One) {
        std::vector<double> lower, upper;
        for (int j = 0; j <= k; ++j) lower.push_back(log_pmf[j]);
        for (int j = k; j <= n; ++j) upper.push_back(log_pmf[j]);
        const double log_lower = log_sum_exp(lower);
        const double log_upper = log_sum_exp(upper);
        return std::min(1.0, std::exp(std::min(log_lower, log_upper)));
    }
    // Two-sided: every outcome at most as probable as the observed one,
    // with a small relative slack for ties across the distribution's mirror.
    const double threshold = log_pmf[k] + 1e-7;
    for (int j = 0; j <= n; ++j)
        if (log_pmf[j] <= threshold) tail.push_back(log_pmf[j]);
    return std::min(1.0, std::exp(log_sum_exp(tail)));
}

ChoiceDataset simulate_choices(double prob_prefer, int n, std::uint64_t seed) {
    require(prob_prefer >= 0.0 && prob_prefer <= 1.0,
            "simulate_choices: probability must lie in [0,1]");
    require(n >= 1, "simulate_choices: n must be >= 1");
    int preferred = 0;
    for (int i = 0; i < n; ++i) {
        // Counter-based draw: respondent index hashed with the seed.
        const std::uint64_t x = splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (i + 1)));
        const double u = static_cast<double>(x >> 11) * 0x1.0p-53;
        if (u < prob_prefer) ++preferred;
    }
    ChoiceDataset data;
    data.label = "simulated";
    data.n_respondents = n;
    data.counts["prefer"] = preferred;
    data.counts["other"] = n - preferred;
    return data;
}

}  // namespace qdm
