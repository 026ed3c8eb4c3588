#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qdm/linalg.hpp"

namespace qdm {

enum class Ordering { AFirst, BFirst, Indifferent };

constexpr double kTieTol = 1e-12;

/// Mutually exclusive, exhaustive event labels (a finite partition).
struct EventPartition {
    std::vector<std::string> labels;

    explicit EventPartition(std::vector<std::string> labels_in);
    std::size_t size() const { return labels.size(); }
};

/// Kolmogorovian measure restricted to a finite partition.
struct ClassicalMeasure {
    std::vector<double> probabilities;

    explicit ClassicalMeasure(std::vector<double> probabilities_in);
    std::size_t size() const { return probabilities.size(); }
};

/// An act (E_1,x_1;...;E_n,x_n): event partition paired with monetary payoffs.
struct Act {
    EventPartition partition;
    std::vector<double> payoffs;

    Act(EventPartition partition_in, std::vector<double> payoffs_in);
    std::size_t size() const { return payoffs.size(); }
};

/// Strictly increasing utility. Monotonicity is sampled on [lo, hi] at unit steps.
class UtilityFn {
public:
    UtilityFn(std::function<double(double)> evaluator, std::string description);

    static UtilityFn identity();
    static UtilityFn affine(double a, double b);  // a*x + b, a > 0

    double operator()(double x) const { return evaluator_(x); }
    const std::string& description() const { return description_; }

    /// Throws unless u(x) < u(y) for every sampled x < y on the grid.
    void check_increasing_on(double lo, double hi) const;

private:
    std::function<double(double)> evaluator_;
    std::string description_;
};

double classical_eu(const Act& act, const ClassicalMeasure& measure, const UtilityFn& u);

Ordering preference(const Act& a, const Act& b, const ClassicalMeasure& measure,
                    const UtilityFn& u);

/// A pair of strict preferences over the two-urn acts of the Ellsberg setup.
struct EllsbergPattern {
    bool prefers_f2_over_f1 = true;  // false means f1 > f2
    bool prefers_f4_over_f3 = true;  // false means f3 > f4
};

struct FeasibilityResult {
    bool feasible = false;
    std::optional<double> witness_p_red;  // a measure (p_R, 1-p_R) rationalizing the pattern
};

/// Searches for a single measure p_R in [0,1] rationalizing both strict
/// preferences under any strictly increasing u (grid step 1e-4 plus endpoints).
FeasibilityResult ellsberg_feasibility(const EllsbergPattern& pattern);

struct AffineInvarianceReport {
    std::size_t pairs_checked = 0;
    std::size_t mismatches = 0;
    bool invariant = false;
};

AffineInvarianceReport affine_invariance_check(const std::vector<Act>& acts,
                                               const ClassicalMeasure& measure,
                                               const UtilityFn& u, double a, double b);

}  // namespace qdm
