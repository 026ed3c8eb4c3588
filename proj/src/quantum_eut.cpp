#include "qdm/quantum_eut.hpp"

#include <cmath>
#include <utility>

namespace qdm {

ActOperator act_operator(const Act& act, const UtilityFn& u) {
    require(act.size() >= 1, "act_operator: act must have at least one payoff");
    std::vector<double> diag;
    diag.reserve(act.size());
    double lo = act.payoffs.front(), hi = act.payoffs.front();
    for (double x : act.payoffs) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
        diag.push_back(u(x));
    }
    u.check_increasing_on(lo, hi);
    return ActOperator{act, u, Operator::diagonal(diag)};
}

double quantum_eu(const StateVector& state, const ActOperator& f) {
    return expectation(state, f.op);
}

std::vector<double> subjective_probabilities(const StateVector& state) {
    std::vector<double> probs;
    probs.reserve(state.dim());
    for (std::size_t i = 0; i < state.dim(); ++i) probs.push_back(std::norm(state[i]));
    return probs;
}

PreferenceResult state_preference(const StateVector& state_a, const ActOperator& f,
                                  const StateVector& state_b, const ActOperator& g,
                                  std::string state_label) {
    require(state_a.dim() == state_b.dim(), "state_preference: state dimension mismatch");
    PreferenceResult result;
    result.eu_a = quantum_eu(state_a, f);
    result.eu_b = quantum_eu(state_b, g);
    result.state_label = std::move(state_label);
    if (std::abs(result.eu_a - result.eu_b) <= kTieTol)
        result.ordering = Ordering::Indifferent;
    else
        result.ordering = result.eu_a > result.eu_b ? Ordering::AFirst : Ordering::BFirst;
    return result;
}

}  // namespace qdm
