#pragma once

#include <optional>
#include <string>
#include <utility>

#include "qdm/quantum_eut.hpp"

namespace qdm {

struct TwoUrnScenario {
    double payoff_high = 100.0;
    double payoff_low = 0.0;
    UtilityFn utility = UtilityFn::identity();

    void validate() const;
};

enum class ScenarioKind { Gain, Loss };
enum class Regime { HighP, LowP };

struct Benchmark {
    std::string label;  // e.g. "IRR"
    double value = 0.0;
};

/// Risky-vs-ambiguous comparison: risky probability p_bar of realizing the
/// payoff, ambiguous probability anywhere in [p_bar - delta, p_bar + delta].
struct GainLossScenario {
    ScenarioKind kind = ScenarioKind::Gain;
    double p_bar = 0.5;
    double delta = 0.0;
    double payoff = 0.0;  // G > 0 for Gain, L < 0 for Loss (u(0) baseline)
    Benchmark benchmark;
    std::optional<double> observed_risky_rate;
    UtilityFn utility = UtilityFn::identity();

    void validate() const;
    StateVector initial_state() const;  // (sqrt(p_bar), sqrt(1 - p_bar))
};

struct Attitude {
    enum class Value { Averse, Seeking, Neutral };
    enum class Effect { Fear, Hope, None };
    Value value = Value::Neutral;
    Effect effect = Effect::None;
};

struct TwoUrnEuTable {
    double eu_f1_at_v12 = 0.0;
    double eu_f2_at_v0 = 0.0;
    double eu_f3_at_v34 = 0.0;
    double eu_f4_at_v0 = 0.0;
    Ordering choice_12 = Ordering::Indifferent;  // f1 vs f2
    Ordering choice_34 = Ordering::Indifferent;  // f3 vs f4
};

StateVector two_urn_initial_state();

/// v12 = (sqrt(a), sqrt(1-a)), v34 = (sqrt(1-a), -sqrt(a)); orthogonal pair.
std::pair<StateVector, StateVector> averse_states(double alpha);

TwoUrnEuTable two_urn_eu_table(double alpha, const TwoUrnScenario& scenario);

StateVector gain_state(double p_bar, double alpha, Regime regime);
StateVector loss_state(double p_bar, double alpha, Regime regime);

Attitude classify_attitude(const GainLossScenario& scenario, const StateVector& final_state);

}  // namespace qdm
