#include "qdm/fit.hpp"

#include <algorithm>
#include <cmath>

namespace qdm {

namespace {

constexpr double kFitResidualTol = 1e-9;
constexpr double kBisectionTol = 1e-12;
constexpr double kScanStep = 1e-3;
constexpr int kMaxBisectionIters = 200;

bool state_is_real(const StateVector& v) {
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (std::abs(v[i].imag()) > kUnitNormTol) return false;
    return true;
}

StateVector measurement_ket(double rho, double tau, double phase_deg) {
    const double theta = deg_to_rad(phase_deg);
    return StateVector::normalized(
        {Complex(rho * std::cos(theta), rho * std::sin(theta)), Complex(tau, 0.0)});
}

/// Born probability |<m|v>|^2 of the ket (rho e^{i theta}, tau) on v.
double ket_born(double rho, double phase_deg, const StateVector& v) {
    const double tau = std::sqrt(std::max(0.0, 1.0 - rho * rho));
    const double theta = deg_to_rad(phase_deg);
    const Complex overlap =
        rho * std::exp(Complex(0.0, -theta)) * v[0] + tau * v[1];
    return std::norm(overlap);
}

double bisect_root(double lo, double hi, double f_lo, double phase_deg,
                   const StateVector& v, double target) {
    for (int iter = 0; iter < kMaxBisectionIters && hi - lo > kBisectionTol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = ket_born(mid, phase_deg, v) - target;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

void finalize_feasible(FitSolution& solution, double rho, const FitProblem& problem) {
    solution.feasible = true;
    solution.rho = rho;
    solution.tau = std::sqrt(std::max(0.0, 1.0 - rho * rho));
    const StateVector ket = measurement_ket(solution.rho, solution.tau, problem.phase_deg);
    solution.measurement = projector_from_ket(ket);
    const double achieved = born_probability(problem.final_state, *solution.measurement);
    solution.residuals["target"] = std::abs(achieved - problem.target_rate);
    if (problem.indifference_state) {
        const double indiff = born_probability(*problem.indifference_state, *solution.measurement);
        solution.residuals["indifference"] =
            std::abs(indiff - problem.indifference_rate.value_or(0.5));
    }
}

}  // namespace

PhaseConvention PhaseConvention::normalized() const {
    return {normalize_deg(theta_m_deg), normalize_deg(phi_m_deg), normalize_deg(theta_n_deg),
            normalize_deg(phi_n_deg)};
}

void FitProblem::validate() const {
    require(final_state.dim() == 2, "FitProblem: final state must be 2-dimensional");
    require(target_rate >= 0.0 && target_rate <= 1.0, "FitProblem: target rate must lie in [0,1]");
    if (indifference_rate)
        require(*indifference_rate >= 0.0 && *indifference_rate <= 1.0,
                "FitProblem: indifference rate must lie in [0,1]");
    if (indifference_state)
        require(indifference_state->dim() == 2,
                "FitProblem: indifference state must be 2-dimensional");
}

FitSolution fit_measurement(const FitProblem& problem) {
    problem.validate();
    FitSolution solution;
    solution.fitted_state = problem.final_state;
    solution.target_rate = problem.target_rate;
    solution.phase_deg = normalize_deg(problem.phase_deg);

    const StateVector& v = problem.final_state;
    const double t = problem.target_rate;
    const double rel = solution.phase_deg;
    const bool cross_term_vanishes =
        (std::abs(rel - 90.0) < 1e-9 || std::abs(rel - 270.0) < 1e-9) && state_is_real(v);

    if (cross_term_vanishes) {
        solution.branch = FitBranch::ClosedForm;
        const double v1sq = std::norm(v[0]);
        const double v2sq = std::norm(v[1]);
        solution.attained_min = std::min(v1sq, v2sq);
        solution.attained_max = std::max(v1sq, v2sq);
        if (std::abs(v1sq - v2sq) <= kUnitNormTol) {
            // Symmetric state: the rate is v2sq for every rho.
            if (std::abs(t - v2sq) <= kFitResidualTol) {
                finalize_feasible(solution, 1.0 / std::sqrt(2.0), problem);
                solution.all_roots = {solution.rho};
            }
            return solution;
        }
        const double rho_sq = (t - v2sq) / (v1sq - v2sq);
        if (rho_sq >= 0.0 && rho_sq <= 1.0) {
            finalize_feasible(solution, std::sqrt(rho_sq), problem);
            solution.all_roots = {solution.rho};
        }
        return solution;
    }

    solution.branch = FitBranch::Bisection;
    // Sign scan over rho in [0,1]: collect every bracket, bisect each.
    double prev_rho = 0.0;
    double prev_f = ket_born(prev_rho, rel, v) - t;
    solution.attained_min = prev_f + t;
    solution.attained_max = prev_f + t;
    if (std::abs(prev_f) <= kBisectionTol) solution.all_roots.push_back(prev_rho);
    const int steps = static_cast<int>(std::lround(1.0 / kScanStep));
    for (int i = 1; i <= steps; ++i) {
        const double rho = static_cast<double>(i) / steps;
        const double f = ket_born(rho, rel, v) - t;
        solution.attained_min = std::min(solution.attained_min, f + t);
        solution.attained_max = std::max(solution.attained_max, f + t);
        if (std::abs(f) <= kBisectionTol) {
            solution.all_roots.push_back(rho);
        } else if ((f < 0.0) != (prev_f < 0.0) && std::abs(prev_f) > kBisectionTol) {
            solution.all_roots.push_back(bisect_root(prev_rho, rho, prev_f, rel, v, t));
        }
        prev_rho = rho;
        prev_f = f;
    }
    std::sort(solution.all_roots.begin(), solution.all_roots.end());
    solution.all_roots.erase(
        std::unique(solution.all_roots.begin(), solution.all_roots.end(),
                    [](double a, double b) { return std::abs(a - b) < 1e-9; }),
        solution.all_roots.end());
    if (!solution.all_roots.empty()) {
        const double rho = problem.root_pick == RootPick::Largest ? solution.all_roots.back()
                                                                  : solution.all_roots.front();
        finalize_feasible(solution, rho, problem);
    }
    return solution;
}

TwoUrnFitResult fit_two_urn(double rate_12, double rate_34, double alpha,
                            const PhaseConvention& convention) {
    require(rate_12 >= 0.0 && rate_12 <= 1.0, "fit_two_urn: rate_12 must lie in [0,1]");
    require(rate_34 >= 0.0 && rate_34 <= 1.0, "fit_two_urn: rate_34 must lie in [0,1]");
    auto [v12, v34] = averse_states(alpha);
    const StateVector v0 = two_urn_initial_state();
    const PhaseConvention conv = convention.normalized();

    FitProblem problem_m{v12, rate_12, v0, 0.5, conv.relative_m_deg(), RootPick::Largest};
    FitProblem problem_n{v34, rate_34, v0, 0.5, conv.relative_n_deg(), RootPick::Largest};
    TwoUrnFitResult result{std::move(v12), std::move(v34), fit_measurement(problem_m),
                           fit_measurement(problem_n)};

    if (result.m.feasible)
        result.indifference_m = born_probability(v0, *result.m.measurement);
    if (result.n.feasible)
        result.indifference_n = born_probability(v0, *result.n.measurement);
    result.indifference_ok = result.m.feasible && result.n.feasible &&
                             std::abs(result.indifference_m - 0.5) <= kFitResidualTol &&
                             std::abs(result.indifference_n - 0.5) <= kFitResidualTol;
    return result;
}

FitSolution fit_gain_loss(const GainLossScenario& scenario, double alpha, double phase_deg) {
    scenario.validate();
    require(scenario.observed_risky_rate.has_value(),
            "fit_gain_loss: scenario is missing the observed risky-choice rate");
    require(alpha >= 0.0 && alpha <= scenario.delta,
            "fit_gain_loss: alpha must lie in [0, delta]");
    const StateVector final_state =
        scenario.kind == ScenarioKind::Gain
            ? gain_state(scenario.p_bar, alpha, Regime::HighP)
            : loss_state(scenario.p_bar, alpha, Regime::HighP);
    FitProblem problem{final_state, *scenario.observed_risky_rate, std::nullopt, std::nullopt,
                       phase_deg, RootPick::Largest};
    return fit_measurement(problem);
}

PaperCheck verify_against_paper(const FitSolution& solution, const Operator& printed,
                                double tol) {
    require(solution.fitted_state.has_value(), "verify_against_paper: solution lacks a state");
    require(printed.dim() == solution.fitted_state->dim(),
            "verify_against_paper: dimension mismatch");
    PaperCheck check;
    check.printed_validity = validate_projector(printed, tol);
    // The printed matrix may fail the projector axioms; evaluate its quadratic
    // form directly rather than through the validated Projector path.
    const StateVector& state = *solution.fitted_state;
    const std::vector<Complex> pv = printed.apply(state.components());
    Complex quad(0.0, 0.0);
    for (std::size_t i = 0; i < state.dim(); ++i) quad += std::conj(state[i]) * pv[i];
    check.printed_born = quad.real();

    if (solution.feasible && solution.measurement) {
        check.max_entry_deviation = solution.measurement->base().max_abs_diff(printed);
        check.pass = check.max_entry_deviation <= tol &&
                     check.printed_validity.is_rank_one_projector() &&
                     std::abs(check.printed_born - solution.target_rate) <= tol;
    }
    return check;
}

FitSolution rederive_roi_loss(double phase_deg) {
    const StateVector v_lh({Complex(std::sqrt(0.55), 0.0), Complex(std::sqrt(0.45), 0.0)});
    FitProblem problem{v_lh, 0.41, std::nullopt, std::nullopt, phase_deg, RootPick::Smallest};
    return fit_measurement(problem);
}

}  // namespace qdm
