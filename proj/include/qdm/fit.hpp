#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qdm/hilbert.hpp"
#include "qdm/scenarios.hpp"

namespace qdm {

/// Measurement-ket phases, degrees in [0, 360).
struct PhaseConvention {
    double theta_m_deg = 90.0;
    double phi_m_deg = 0.0;
    double theta_n_deg = 270.0;
    double phi_n_deg = 0.0;

    static PhaseConvention two_urn() { return {90.0, 0.0, 270.0, 0.0}; }

    PhaseConvention normalized() const;
    double relative_m_deg() const { return normalize_deg(theta_m_deg - phi_m_deg); }
    double relative_n_deg() const { return normalize_deg(theta_n_deg - phi_n_deg); }
};

enum class FitBranch { ClosedForm, Bisection };
enum class RootPick { Largest, Smallest };

/// One-measurement fit: find a unit ket |m> = (rho e^{i theta}, tau) with
/// |<m|v>|^2 equal to the target rate.
struct FitProblem {
    StateVector final_state;
    double target_rate = 0.5;
    std::optional<StateVector> indifference_state;
    std::optional<double> indifference_rate;  // 0.5 when present
    double phase_deg = 90.0;                  // relative phase of the ket's first component
    RootPick root_pick = RootPick::Largest;

    void validate() const;
};

struct FitSolution {
    double rho = 0.0;
    double tau = 0.0;
    std::optional<Projector> measurement;
    std::map<std::string, double> residuals;
    FitBranch branch = FitBranch::ClosedForm;
    bool feasible = false;
    // Attained Born-probability range over rho in [0,1] (diagnostic; filled
    // for infeasible problems and for bisection fits).
    double attained_min = 0.0;
    double attained_max = 1.0;
    std::vector<double> all_roots;  // every rho solving the constraint, ascending
    std::optional<StateVector> fitted_state;
    double target_rate = 0.0;
    double phase_deg = 0.0;
};

FitSolution fit_measurement(const FitProblem& problem);

struct TwoUrnFitResult {
    StateVector v12;
    StateVector v34;
    FitSolution m;  // decision f1-vs-f2 measurement
    FitSolution n;  // decision f3-vs-f4 measurement
    double indifference_m = 0.0;  // <v0|M|v0>
    double indifference_n = 0.0;  // <v0|N|v0>
    bool indifference_ok = false;
};

TwoUrnFitResult fit_two_urn(double rate_12, double rate_34, double alpha,
                            const PhaseConvention& convention);

/// Fits a projector to the scenario's observed risky-choice rate, with the
/// final state built in the high-probability regime.
FitSolution fit_gain_loss(const GainLossScenario& scenario, double alpha, double phase_deg);

struct PaperCheck {
    double max_entry_deviation = 0.0;
    ProjectorReport printed_validity;
    double printed_born = 0.0;  // Born probability of the printed matrix on the fitted state
    bool pass = false;
};

PaperCheck verify_against_paper(const FitSolution& solution, const Operator& printed, double tol);

/// Replacement for the published ROI-loss measurement, whose printed matrix is
/// not a rank-1 projector and does not reproduce the 0.41 rate. Solves
/// <v_LH|N'|v_LH> = 0.41 with v_LH = (sqrt(0.55), sqrt(0.45)).
FitSolution rederive_roi_loss(double phase_deg);

}  // namespace qdm
