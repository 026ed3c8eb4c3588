#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace qdm {

/// Machine-readable report plus the overall golden-check verdict.
struct ReportBundle {
    nlohmann::json doc;
    bool passed = true;
};

/// Resolution order: explicit argument, QDM_DATA_DIR environment variable,
/// compiled-in default (the source tree's data/ directory).
std::string resolve_data_dir(const char* explicit_dir);

/// Golden reproduction run; target is one of "two-urn", "irr", "roi", "all".
ReportBundle run_reproduce(const std::string& target, const std::string& data_dir);

ReportBundle run_fit(const std::string& scenario_json, std::optional<double> alpha_override,
                     std::optional<double> phase_deg_override, const std::string& data_dir);

ReportBundle run_simulate(const std::string& scenario_json, int n, std::uint64_t seed,
                          const std::string& data_dir);

ReportBundle run_check(const std::string& operator_json, double tol);

std::string render_markdown(const nlohmann::json& doc);

}  // namespace qdm
