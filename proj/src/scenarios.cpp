#include "qdm/scenarios.hpp"

#include <cmath>

namespace qdm {

namespace {

StateVector shifted_state(double p_bar, double alpha, Regime regime) {
    require(p_bar >= 0.0 && p_bar <= 1.0, "scenario: p_bar must lie in [0,1]");
    require(alpha >= 0.0, "scenario: alpha must be >= 0");
    const double shift = regime == Regime::HighP ? -alpha : alpha;
    const double p1 = p_bar + shift;
    require(p1 >= 0.0 && p1 <= 1.0,
            "scenario: shifted probability " + std::to_string(p1) + " outside [0,1]");
    return StateVector({Complex(std::sqrt(p1), 0.0), Complex(std::sqrt(1.0 - p1), 0.0)});
}

Act binary_act(double first_payoff, const char* first_label, const char* second_label) {
    return Act(EventPartition({first_label, second_label}), {first_payoff, 0.0});
}

}  // namespace

void TwoUrnScenario::validate() const {
    require(payoff_high > payoff_low, "TwoUrnScenario: payoff_high must exceed payoff_low");
    utility.check_increasing_on(payoff_low, payoff_high);
}

void GainLossScenario::validate() const {
    require(p_bar >= 0.0 && p_bar <= 1.0, "GainLossScenario: p_bar must lie in [0,1]");
    require(delta >= 0.0, "GainLossScenario: delta must be >= 0");
    require(p_bar - delta >= 0.0 && p_bar + delta <= 1.0,
            "GainLossScenario: [p_bar - delta, p_bar + delta] must stay inside [0,1]");
    if (kind == ScenarioKind::Gain)
        require(utility(payoff) > utility(0.0), "GainLossScenario: gain requires u(payoff) > u(0)");
    else
        require(utility(payoff) < utility(0.0), "GainLossScenario: loss requires u(payoff) < u(0)");
    if (observed_risky_rate)
        require(*observed_risky_rate >= 0.0 && *observed_risky_rate <= 1.0,
                "GainLossScenario: observed_risky_rate must lie in [0,1]");
}

StateVector GainLossScenario::initial_state() const {
    return StateVector({Complex(std::sqrt(p_bar), 0.0), Complex(std::sqrt(1.0 - p_bar), 0.0)});
}

StateVector two_urn_initial_state() {
    const double c = 1.0 / std::sqrt(2.0);
    return StateVector({Complex(c, 0.0), Complex(c, 0.0)});
}

std::pair<StateVector, StateVector> averse_states(double alpha) {
    require(alpha >= 0.0 && alpha < 0.5, "averse_states: alpha must lie in [0, 0.5)");
    const double r = std::sqrt(alpha);
    const double s = std::sqrt(1.0 - alpha);
    StateVector v12({Complex(r, 0.0), Complex(s, 0.0)});
    StateVector v34({Complex(s, 0.0), Complex(-r, 0.0)});
    return {std::move(v12), std::move(v34)};
}

TwoUrnEuTable two_urn_eu_table(double alpha, const TwoUrnScenario& scenario) {
    scenario.validate();
    const auto [v12, v34] = averse_states(alpha);
    const StateVector v0 = two_urn_initial_state();

    const Act bet_red = Act(EventPartition({"E_R", "E_B"}),
                            {scenario.payoff_high, scenario.payoff_low});
    const Act bet_black = Act(EventPartition({"E_R", "E_B"}),
                              {scenario.payoff_low, scenario.payoff_high});
    // f1/f2 both bet on red and f3/f4 both on black; the operators coincide
    // pairwise, only the states they are evaluated in differ.
    const ActOperator f_red = act_operator(bet_red, scenario.utility);
    const ActOperator f_black = act_operator(bet_black, scenario.utility);

    TwoUrnEuTable table;
    table.eu_f1_at_v12 = quantum_eu(v12, f_red);
    table.eu_f2_at_v0 = quantum_eu(v0, f_red);
    table.eu_f3_at_v34 = quantum_eu(v34, f_black);
    table.eu_f4_at_v0 = quantum_eu(v0, f_black);
    table.choice_12 =
        state_preference(v12, f_red, v0, f_red, "v12 vs v0").ordering;
    table.choice_34 =
        state_preference(v34, f_black, v0, f_black, "v34 vs v0").ordering;
    return table;
}

StateVector gain_state(double p_bar, double alpha, Regime regime) {
    return shifted_state(p_bar, alpha, regime);
}

StateVector loss_state(double p_bar, double alpha, Regime regime) {
    return shifted_state(p_bar, alpha, regime);
}

Attitude classify_attitude(const GainLossScenario& scenario, const StateVector& final_state) {
    scenario.validate();
    require(final_state.dim() == 2, "classify_attitude: final state must be 2-dimensional");
    const Act act = binary_act(scenario.payoff,
                               scenario.kind == ScenarioKind::Gain ? "E_gain" : "E_loss",
                               scenario.kind == ScenarioKind::Gain ? "E_no_gain" : "E_no_loss");
    const ActOperator f = act_operator(act, scenario.utility);
    const double w_ambiguous = quantum_eu(final_state, f);
    const double w_risky = quantum_eu(scenario.initial_state(), f);

    Attitude attitude;
    if (std::abs(w_ambiguous - w_risky) <= kTieTol) return attitude;  // Neutral / None
    const bool prefers_ambiguous = w_ambiguous > w_risky;
    if (prefers_ambiguous) {
        attitude.value = Attitude::Value::Seeking;
        attitude.effect = Attitude::Effect::Hope;
    } else {
        attitude.value = Attitude::Value::Averse;
        attitude.effect = Attitude::Effect::Fear;
    }
    return attitude;
}

}  // namespace qdm
