#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qdm/linalg.hpp"

namespace qdm {

/// Respondent counts keyed by choice-pattern label, e.g. "f1f3" -> 26.
struct ChoiceDataset {
    std::string label;
    int n_respondents = 0;
    std::map<std::string, int> counts;

    void validate() const;
};

struct RateResult {
    int numerator = 0;
    int denominator = 0;
    double rate = 0.0;
    double p_value = 1.0;
    std::string test;
};

enum class Sided { One, Two };

/// Aggregates every pattern containing the marker (alternatives separated by
/// '|', e.g. "f1f3|f2f4") and attaches an exact binomial p-value vs null 0.5.
RateResult preference_rate(const ChoiceDataset& data, const std::string& preferred_marker);

/// Exact binomial tail probability, log-domain summation. One-sided is the
/// smaller tail (direction of the observation); two-sided sums all outcomes
/// whose point probability does not exceed that of k.
double exact_binomial(int k, int n, double p0, Sided sided);

/// The name reported alongside simulated datasets.
inline constexpr const char* kSimulationRngName = "splitmix64";

/// Deterministic per-seed Monte-Carlo respondents: each independently prefers
/// the marked act with probability prob_prefer.
ChoiceDataset simulate_choices(double prob_prefer, int n, std::uint64_t seed);

}  // namespace qdm
