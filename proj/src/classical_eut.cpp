#include "qdm/classical_eut.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace qdm {

EventPartition::EventPartition(std::vector<std::string> labels_in)
    : labels(std::move(labels_in)) {
    require(!labels.empty(), "EventPartition: needs at least one event");
    std::set<std::string> unique(labels.begin(), labels.end());
    require(unique.size() == labels.size(), "EventPartition: labels must be unique");
}

ClassicalMeasure::ClassicalMeasure(std::vector<double> probabilities_in)
    : probabilities(std::move(probabilities_in)) {
    require(!probabilities.empty(), "ClassicalMeasure: needs at least one probability");
    double total = 0.0;
    for (double p : probabilities) {
        require(p >= 0.0 && p <= 1.0, "ClassicalMeasure: probabilities must lie in [0,1]");
        total += p;
    }
    require(std::abs(total - 1.0) <= kUnitNormTol, "ClassicalMeasure: probabilities must sum to 1");
}

Act::Act(EventPartition partition_in, std::vector<double> payoffs_in)
    : partition(std::move(partition_in)), payoffs(std::move(payoffs_in)) {
    require(payoffs.size() == partition.size(),
            "Act: payoffs length must match the event partition");
}

UtilityFn::UtilityFn(std::function<double(double)> evaluator, std::string description)
    : evaluator_(std::move(evaluator)), description_(std::move(description)) {
    require(static_cast<bool>(evaluator_), "UtilityFn: evaluator must be callable");
}

UtilityFn UtilityFn::identity() {
    return UtilityFn([](double x) { return x; }, "identity");
}

UtilityFn UtilityFn::affine(double a, double b) {
    require(a > 0.0, "UtilityFn::affine: slope must be positive");
    return UtilityFn([a, b](double x) { return a * x + b; },
                     "affine(" + std::to_string(a) + "," + std::to_string(b) + ")");
}

void UtilityFn::check_increasing_on(double lo, double hi) const {
    require(lo <= hi, "UtilityFn: empty check interval");
    double prev_x = lo;
    double prev_u = evaluator_(lo);
    for (double x = lo + 1.0; x <= hi; x += 1.0) {
        const double u = evaluator_(x);
        require(u > prev_u, "UtilityFn: not strictly increasing between " +
                                std::to_string(prev_x) + " and " + std::to_string(x));
        prev_x = x;
        prev_u = u;
    }
    if (prev_x < hi) {
        require(evaluator_(hi) > prev_u, "UtilityFn: not strictly increasing near " +
                                             std::to_string(hi));
    }
}

double classical_eu(const Act& act, const ClassicalMeasure& measure, const UtilityFn& u) {
    require(measure.size() == act.size(), "classical_eu: measure/act length mismatch");
    double w = 0.0;
    for (std::size_t i = 0; i < act.size(); ++i)
        w += measure.probabilities[i] * u(act.payoffs[i]);
    return w;
}

Ordering preference(const Act& a, const Act& b, const ClassicalMeasure& measure,
                    const UtilityFn& u) {
    require(a.partition.labels == b.partition.labels,
            "preference: acts must share the same event partition");
    const double wa = classical_eu(a, measure, u);
    const double wb = classical_eu(b, measure, u);
    if (std::abs(wa - wb) <= kTieTol) return Ordering::Indifferent;
    return wa > wb ? Ordering::AFirst : Ordering::BFirst;
}

FeasibilityResult ellsberg_feasibility(const EllsbergPattern& pattern) {
    // For any strictly increasing u, u(100) > u(0), so with s = p_R - 1/2:
    //   f2 > f1  <=>  s < 0      f1 > f2  <=>  s > 0
    //   f4 > f3  <=>  s > 0      f3 > f4  <=>  s < 0
    // The witness search runs the grid anyway so the verdict is executable,
    // not just the sign argument.
    FeasibilityResult result;
    const int steps = 10000;  // resolution 1e-4
    for (int i = 0; i <= steps; ++i) {
        const double p_red = static_cast<double>(i) / steps;
        const double s = p_red - 0.5;
        const bool f2_wins = s < 0.0;
        const bool f4_wins = s > 0.0;
        if (s == 0.0) continue;  // indifference rationalizes neither strict preference
        if (f2_wins == pattern.prefers_f2_over_f1 && f4_wins == pattern.prefers_f4_over_f3) {
            result.feasible = true;
            result.witness_p_red = p_red;
            return result;
        }
    }
    return result;
}

AffineInvarianceReport affine_invariance_check(const std::vector<Act>& acts,
                                               const ClassicalMeasure& measure,
                                               const UtilityFn& u, double a, double b) {
    require(a > 0.0, "affine_invariance_check: slope must be positive");
    const UtilityFn transformed(
        [&u, a, b](double x) { return a * u(x) + b; },
        "affine-of-" + u.description());
    AffineInvarianceReport report;
    for (std::size_t i = 0; i < acts.size(); ++i)
        for (std::size_t j = i + 1; j < acts.size(); ++j) {
            ++report.pairs_checked;
            if (preference(acts[i], acts[j], measure, u) !=
                preference(acts[i], acts[j], measure, transformed))
                ++report.mismatches;
        }
    report.invariant = report.mismatches == 0;
    return report;
}

}  // namespace qdm
