#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qdm/fit.hpp"

using namespace qdm;

namespace {

StateVector real_state(double p) {
    return StateVector({Complex(std::sqrt(p), 0.0), Complex(std::sqrt(1.0 - p), 0.0)});
}

}  // namespace

TEST_CASE("closed form at 90 degrees") {
    // rho^2 = (t - v2^2) / (v1^2 - v2^2); with v = (sqrt(0.2), sqrt(0.8)),
    // t = 0.62: rho^2 = (0.62 - 0.8) / (0.2 - 0.8) = 0.3.
    FitProblem problem{real_state(0.2), 0.62, std::nullopt, std::nullopt, 90.0,
                       RootPick::Largest};
    const FitSolution solution = fit_measurement(problem);
    CHECK(solution.feasible);
    CHECK(solution.branch == FitBranch::ClosedForm);
    CHECK(solution.rho == doctest::Approx(std::sqrt(0.3)).epsilon(1e-12));
    CHECK(solution.residuals.at("target") <= 1e-9);
    REQUIRE(solution.measurement.has_value());
    CHECK(validate_projector(solution.measurement->base(), 1e-10).is_rank_one_projector());
    CHECK(born_probability(problem.final_state, *solution.measurement) ==
          doctest::Approx(0.62).epsilon(1e-12));
}

TEST_CASE("two-urn joint fit reproduces the published parameters") {
    const TwoUrnFitResult fit = fit_two_urn(0.82, 0.84, 0.14815, PhaseConvention::two_urn());
    CHECK(fit.m.rho == doctest::Approx(0.21274).epsilon(1e-4));
    CHECK(fit.m.tau == doctest::Approx(0.97711).epsilon(1e-4));
    CHECK(fit.n.rho == doctest::Approx(0.99155).epsilon(1e-4));
    CHECK(fit.n.tau == doctest::Approx(0.12975).epsilon(1e-4));
    CHECK(fit.indifference_ok);
    CHECK(fit.indifference_m == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(fit.indifference_n == doctest::Approx(0.5).epsilon(1e-9));
    // Both fitted projectors reproduce their target rates tightly.
    CHECK(born_probability(fit.v12, *fit.m.measurement) == doctest::Approx(0.82).epsilon(1e-9));
    CHECK(born_probability(fit.v34, *fit.n.measurement) == doctest::Approx(0.84).epsilon(1e-9));
    // Off-diagonal entries are purely imaginary under the 90/270 convention.
    CHECK(std::abs(fit.m.measurement->base().at(0, 1).real()) <= 1e-12);
    CHECK(std::abs(fit.n.measurement->base().at(0, 1).real()) <= 1e-12);
}

TEST_CASE("bisection branch at 0 and 180 degrees picks the largest root") {
    // ROI gain: v = (sqrt(0.58), sqrt(0.42)), t = 0.66, theta = 0. Two roots
    // exist; the published solution is the larger one.
    FitProblem problem{real_state(0.58), 0.66, std::nullopt, std::nullopt, 0.0,
                       RootPick::Largest};
    const FitSolution largest = fit_measurement(problem);
    CHECK(largest.feasible);
    CHECK(largest.branch == FitBranch::Bisection);
    CHECK(largest.all_roots.size() == 2);
    CHECK(largest.rho == doctest::Approx(largest.all_roots.back()));
    CHECK(largest.rho > 0.9);
    CHECK(born_probability(problem.final_state, *largest.measurement) ==
          doctest::Approx(0.66).epsilon(1e-9));

    problem.root_pick = RootPick::Smallest;
    const FitSolution smallest = fit_measurement(problem);
    CHECK(smallest.rho == doctest::Approx(smallest.all_roots.front()));
    CHECK(smallest.rho < largest.rho);
    CHECK(born_probability(problem.final_state, *smallest.measurement) ==
          doctest::Approx(0.66).epsilon(1e-9));
}

TEST_CASE("closed form and bisection agree where both apply") {
    // At 90 degrees the cross term vanishes for real states, so a nearby
    // bisection-only phase (90 + 1e-7 deg) must land on the same rho.
    FitProblem closed{real_state(0.37), 0.55, std::nullopt, std::nullopt, 90.0,
                      RootPick::Largest};
    FitProblem bisect{real_state(0.37), 0.55, std::nullopt, std::nullopt, 90.0 + 1e-7,
                      RootPick::Largest};
    const FitSolution a = fit_measurement(closed);
    const FitSolution b = fit_measurement(bisect);
    CHECK(a.branch == FitBranch::ClosedForm);
    CHECK(b.branch == FitBranch::Bisection);
    CHECK(a.rho == doctest::Approx(b.rho).epsilon(1e-6));
}

TEST_CASE("infeasible targets report the attained range") {
    // theta = 90, v = (sqrt(0.49), sqrt(0.51)): the rate can only move inside
    // [0.49, 0.51], so 0.99 is unattainable.
    FitProblem problem{real_state(0.49), 0.99, std::nullopt, std::nullopt, 90.0,
                       RootPick::Largest};
    const FitSolution solution = fit_measurement(problem);
    CHECK_FALSE(solution.feasible);
    CHECK_FALSE(solution.measurement.has_value());
    CHECK(solution.attained_min == doctest::Approx(0.49).epsilon(1e-9));
    CHECK(solution.attained_max == doctest::Approx(0.51).epsilon(1e-9));
}

TEST_CASE("symmetric state degenerate closed form") {
    const StateVector v0 = real_state(0.5);
    FitProblem hit{v0, 0.5, std::nullopt, std::nullopt, 90.0, RootPick::Largest};
    const FitSolution ok = fit_measurement(hit);
    CHECK(ok.feasible);
    CHECK(born_probability(v0, *ok.measurement) == doctest::Approx(0.5).epsilon(1e-12));
    FitProblem miss{v0, 0.7, std::nullopt, std::nullopt, 90.0, RootPick::Largest};
    CHECK_FALSE(fit_measurement(miss).feasible);
}

TEST_CASE("gain and loss scenario fits") {
    GainLossScenario irr_gain;
    irr_gain.kind = ScenarioKind::Gain;
    irr_gain.p_bar = 0.68;
    irr_gain.delta = 0.21;
    irr_gain.payoff = 1.0;
    irr_gain.observed_risky_rate = 0.62;
    const FitSolution m = fit_gain_loss(irr_gain, 0.05, 90.0);
    CHECK(m.feasible);
    // Published: M_11 = 0.96154 (= rho^2).
    CHECK(m.rho * m.rho == doctest::Approx(0.96154).epsilon(1e-4));

    GainLossScenario irr_loss;
    irr_loss.kind = ScenarioKind::Loss;
    irr_loss.p_bar = 0.65;
    irr_loss.delta = 0.20;
    irr_loss.payoff = -1.0;
    irr_loss.observed_risky_rate = 0.35;
    const FitSolution n = fit_gain_loss(irr_loss, 0.05, 180.0);
    CHECK(n.feasible);
    // Published: N_11 = 0.93733 (large root at 180 degrees).
    CHECK(n.rho * n.rho == doctest::Approx(0.93733).epsilon(1e-4));
    CHECK(born_probability(*n.fitted_state, *n.measurement) ==
          doctest::Approx(0.35).epsilon(1e-9));

    GainLossScenario missing_rate = irr_gain;
    missing_rate.observed_risky_rate.reset();
    CHECK_THROWS_AS(fit_gain_loss(missing_rate, 0.05, 90.0), std::invalid_argument);
    CHECK_THROWS_AS(fit_gain_loss(irr_gain, 0.5, 90.0), std::invalid_argument);
}

TEST_CASE("verify_against_paper") {
    const TwoUrnFitResult fit = fit_two_urn(0.82, 0.84, 0.14815, PhaseConvention::two_urn());
    Operator printed_m(2);
    printed_m.at(0, 0) = Complex(0.04526, 0.0);
    printed_m.at(0, 1) = Complex(0.0, 0.20787);
    printed_m.at(1, 0) = Complex(0.0, -0.20787);
    printed_m.at(1, 1) = Complex(0.95474, 0.0);
    const PaperCheck ok = verify_against_paper(fit.m, printed_m, 1e-4);
    CHECK(ok.pass);
    CHECK(ok.max_entry_deviation <= 1e-4);
    CHECK(ok.printed_born == doctest::Approx(0.82).epsilon(1e-3));

    // A garbled matrix fails but still gets its quadratic form reported.
    Operator garbled = printed_m;
    garbled.at(0, 0) = Complex(0.5, 0.0);
    const PaperCheck bad = verify_against_paper(fit.m, garbled, 1e-4);
    CHECK_FALSE(bad.pass);
    CHECK(bad.max_entry_deviation > 0.1);
}

TEST_CASE("ROI loss re-derivation") {
    const FitSolution n = rederive_roi_loss(180.0);
    CHECK(n.feasible);
    CHECK(validate_projector(n.measurement->base(), 1e-10).is_rank_one_projector());
    CHECK(born_probability(*n.fitted_state, *n.measurement) ==
          doctest::Approx(0.41).epsilon(1e-9));
    // Smallest-root convention for the replacement.
    CHECK(n.rho == doctest::Approx(n.all_roots.front()));
}
