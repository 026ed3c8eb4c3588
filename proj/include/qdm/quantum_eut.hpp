#pragma once

#include <string>

#include "qdm/classical_eut.hpp"
#include "qdm/hilbert.hpp"

namespace qdm {

/// Hermitian act operator sum_i u(x_i) |e_i><e_i|, diagonal in the canonical basis.
struct ActOperator {
    Act act;
    UtilityFn utility;
    Operator op;
};

struct PreferenceResult {
    double eu_a = 0.0;
    double eu_b = 0.0;
    Ordering ordering = Ordering::Indifferent;
    std::string state_label;
};

ActOperator act_operator(const Act& act, const UtilityFn& u);

/// EU of the act in the given state: <v|F|v> = sum_i |<e_i|v>|^2 u(x_i).
double quantum_eu(const StateVector& state, const ActOperator& f);

/// Born weights (|<e_i|v>|^2)_i of the state in the canonical basis.
std::vector<double> subjective_probabilities(const StateVector& state);

/// Compares W_{state_a}(f) against W_{state_b}(g). Distinct states encode the
/// two-entity device: the ambiguous act is evaluated on the changed state, the
/// risky act on the unchanged initial state.
PreferenceResult state_preference(const StateVector& state_a, const ActOperator& f,
                                  const StateVector& state_b, const ActOperator& g,
                                  std::string state_label = {});

}  // namespace qdm
