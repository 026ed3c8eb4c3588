// qdm — fit, reproduce, simulate and validate quantum decision models.
// Talks to the library exclusively through the C API in qdm.h.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qdm.h"

namespace {

constexpr int kExitInput = 2;

bool read_file(const std::string& path, std::string& out, std::string& error) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        error = "cannot open " + path;
        return false;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    out = buffer.str();
    return true;
}

// Emits the selected formats to stdout and, when QDM_OUTPUT_DIR is set, to
// <dir>/<stem>.json / <dir>/<stem>.md as well.
int emit(qdm_report* report, const std::string& format, const std::string& stem) {
    const bool want_json = format == "json" || format == "both";
    const bool want_markdown = format == "markdown" || format == "both";
    if (want_json) std::cout << qdm_report_json(report);
    if (want_markdown) std::cout << qdm_report_markdown(report);

    if (const char* dir = std::getenv("QDM_OUTPUT_DIR"); dir != nullptr && dir[0] != '\0') {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) {
            std::cerr << "qdm: cannot create output directory " << dir << ": " << ec.message()
                      << "\n";
            return kExitInput;
        }
        auto write_out = [&](const char* extension, const char* text) {
            const std::filesystem::path path = std::filesystem::path(dir) / (stem + extension);
            std::ofstream out(path, std::ios::binary);
            out << text;
            if (!out) {
                std::cerr << "qdm: cannot write " << path.string() << "\n";
                return false;
            }
            return true;
        };
        if (want_json && !write_out(".json", qdm_report_json(report))) return kExitInput;
        if (want_markdown && !write_out(".md", qdm_report_markdown(report))) return kExitInput;
    }
    return 0;
}

int conclude(int code, qdm_report* report, const std::string& format, const std::string& stem) {
    if (report == nullptr) {
        std::cerr << "qdm: " << qdm_last_error() << "\n";
        return code == QDM_ERR_INPUT ? kExitInput : code;
    }
    const int emit_code = emit(report, format, stem);
    qdm_report_free(report);
    if (emit_code != 0) return emit_code;
    return code == QDM_ERR_CHECK_FAILED ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum decision-model toolkit: reproduce published fits, fit scenarios, "
                 "simulate respondents and validate measurement operators."};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format = "json";
    app.add_option("--format", format, "Report format written to stdout")
        ->check(CLI::IsMember({"json", "markdown", "both"}))
        ->capture_default_str();
    std::string data_dir;
    app.add_option("--data-dir", data_dir,
                   "Golden-data directory (default: $QDM_DATA_DIR, then the bundled data)");

    auto* reproduce = app.add_subcommand(
        "reproduce", "Re-run a published fit and check it against the recorded golden values. "
                     "Reports also land in $QDM_OUTPUT_DIR when set.");
    std::string target;
    reproduce->add_option("target", target, "two-urn, irr, roi or all")
        ->required()
        ->check(CLI::IsMember({"two-urn", "irr", "roi", "all"}));

    auto* fit = app.add_subcommand("fit", "Fit measurement operators for a scenario file.");
    std::string fit_scenario;
    fit->add_option("--scenario", fit_scenario, "Scenario JSON file")->required();
    double alpha = 0.0, phase_deg = 0.0;
    CLI::Option* alpha_opt =
        fit->add_option("--alpha", alpha, "Override the scenario's ambiguity parameter");
    CLI::Option* phase_opt =
        fit->add_option("--phase-deg", phase_deg, "Override the measurement phase (degrees)");

    auto* simulate =
        app.add_subcommand("simulate", "Fit a scenario, then simulate respondent choices.");
    std::string sim_scenario;
    simulate->add_option("--scenario", sim_scenario, "Scenario JSON file")->required();
    int n = 0;
    simulate->add_option("--n", n, "Number of simulated respondents")
        ->required()
        ->check(CLI::PositiveNumber);
    std::uint64_t seed = 0;
    simulate->add_option("--seed", seed, "RNG seed (same seed, same dataset)")->required();

    auto* check = app.add_subcommand(
        "check", "Validate that a matrix is a projector (Hermitian and idempotent).");
    std::string operator_path;
    check->add_option("--operator", operator_path, "Matrix JSON file")->required();
    double tol = 1e-10;
    check->add_option("--tol", tol, "Validation tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    const char* data_dir_arg = data_dir.empty() ? nullptr : data_dir.c_str();
    qdm_report* report = nullptr;

    if (reproduce->parsed()) {
        const int code = qdm_reproduce(target.c_str(), data_dir_arg, &report);
        return conclude(code, report, format, "reproduce-" + target);
    }
    if (fit->parsed()) {
        std::string scenario_text, error;
        if (!read_file(fit_scenario, scenario_text, error)) {
            std::cerr << "qdm: " << error << "\n";
            return kExitInput;
        }
        const double* alpha_ptr = alpha_opt->count() > 0 ? &alpha : nullptr;
        const double* phase_ptr = phase_opt->count() > 0 ? &phase_deg : nullptr;
        const int code = qdm_fit(scenario_text.c_str(), alpha_ptr, phase_ptr, data_dir_arg, &report);
        return conclude(code, report, format,
                        "fit-" + std::filesystem::path(fit_scenario).stem().string());
    }
    if (simulate->parsed()) {
        std::string scenario_text, error;
        if (!read_file(sim_scenario, scenario_text, error)) {
            std::cerr << "qdm: " << error << "\n";
            return kExitInput;
        }
        const int code = qdm_simulate(scenario_text.c_str(), n, seed, data_dir_arg, &report);
        return conclude(code, report, format,
                        "simulate-" + std::filesystem::path(sim_scenario).stem().string());
    }
    std::string operator_text, error;
    if (!read_file(operator_path, operator_text, error)) {
        std::cerr << "qdm: " << error << "\n";
        return kExitInput;
    }
    const int code = qdm_check_operator(operator_text.c_str(), tol, &report);
    return conclude(code, report, format,
                    "check-" + std::filesystem::path(operator_path).stem().string());
}
