#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qdm/quantum_eut.hpp"

using namespace qdm;

namespace {

Act bet_red(double high, double low) {
    return Act(EventPartition({"E_R", "E_B"}), {high, low});
}

}  // namespace

TEST_CASE("act operator is diagonal in utilities") {
    const ActOperator f = act_operator(bet_red(100.0, 0.0), UtilityFn::affine(2.0, 7.0));
    CHECK(f.op.dim() == 2);
    CHECK(f.op.at(0, 0) == Complex(207.0, 0.0));
    CHECK(f.op.at(1, 1) == Complex(7.0, 0.0));
    CHECK(f.op.at(0, 1) == Complex(0.0, 0.0));
    CHECK(f.op.hermiticity_deviation() == 0.0);
}

TEST_CASE("quantum EU is the Born-weighted utility") {
    const ActOperator f = act_operator(bet_red(100.0, 0.0), UtilityFn::identity());
    const StateVector v =
        StateVector({Complex(std::sqrt(0.3), 0.0), Complex(std::sqrt(0.7), 0.0)});
    CHECK(quantum_eu(v, f) == doctest::Approx(30.0).epsilon(1e-12));
    // Complex phases on the components do not change the diagonal expectation.
    const StateVector w = StateVector::from_polar_deg({std::sqrt(0.3), std::sqrt(0.7)},
                                                      {37.0, 251.0});
    CHECK(quantum_eu(w, f) == doctest::Approx(30.0).epsilon(1e-10));
}

TEST_CASE("quantum EU reduces to classical EU on Born weights") {
    const Act act(EventPartition({"a", "b", "c"}), {5.0, -2.0, 11.0});
    const ActOperator f = act_operator(act, UtilityFn::identity());
    const StateVector v =
        StateVector::normalized({Complex(1.0, -1.0), Complex(2.0, 0.5), Complex(0.0, 3.0)});
    const ClassicalMeasure measure(subjective_probabilities(v));
    CHECK(quantum_eu(v, f) ==
          doctest::Approx(classical_eu(act, measure, UtilityFn::identity())).epsilon(1e-12));
}

TEST_CASE("subjective probabilities sum to one") {
    const StateVector v =
        StateVector::normalized({Complex(0.2, 0.9), Complex(-1.4, 0.0), Complex(0.3, -0.8)});
    const std::vector<double> probs = subjective_probabilities(v);
    double total = 0.0;
    for (double p : probs) {
        CHECK(p >= 0.0);
        total += p;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("state preference compares across states") {
    const ActOperator f = act_operator(bet_red(100.0, 0.0), UtilityFn::identity());
    const StateVector low = StateVector({Complex(std::sqrt(0.2), 0.0), Complex(std::sqrt(0.8), 0.0)});
    const StateVector high = StateVector({Complex(std::sqrt(0.8), 0.0), Complex(std::sqrt(0.2), 0.0)});

    const PreferenceResult r = state_preference(high, f, low, f, "high vs low");
    CHECK(r.eu_a == doctest::Approx(80.0));
    CHECK(r.eu_b == doctest::Approx(20.0));
    CHECK(r.ordering == Ordering::AFirst);
    CHECK(r.state_label == "high vs low");

    CHECK(state_preference(low, f, high, f).ordering == Ordering::BFirst);
    CHECK(state_preference(low, f, low, f).ordering == Ordering::Indifferent);
}

TEST_CASE("act operator rejects mismatched dimensions at evaluation") {
    const ActOperator f = act_operator(bet_red(100.0, 0.0), UtilityFn::identity());
    const StateVector v3 = StateVector::basis(3, 0);
    CHECK_THROWS_AS(quantum_eu(v3, f), std::invalid_argument);
}
