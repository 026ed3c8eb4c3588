#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "qdm/fit.hpp"
#include "qdm/scenarios.hpp"

namespace qdm {

/// Scenario-file violation, message prefixed with the offending field path.
class SchemaError : public std::invalid_argument {
public:
    SchemaError(const std::string& field_path, const std::string& message)
        : std::invalid_argument(field_path + ": " + message), field_path_(field_path) {}
    const std::string& field_path() const { return field_path_; }

private:
    std::string field_path_;
};

struct TwoUrnParams {
    TwoUrnScenario scenario;
    double alpha = 0.14815;
    double rate_12 = 0.82;
    double rate_34 = 0.84;
    PhaseConvention phases;
};

struct GainLossParams {
    GainLossScenario scenario;
    double alpha = 0.05;
    double phase_deg = 90.0;
};

struct ScenarioFile {
    std::string schema_version;
    std::string provenance;
    std::variant<TwoUrnParams, GainLossParams> params;
    nlohmann::json raw;  // exact inputs echoed into reports

    bool is_two_urn() const { return std::holds_alternative<TwoUrnParams>(params); }
};

/// Parses and validates a scenario document; throws SchemaError with a field
/// path on any violation.
ScenarioFile parse_scenario(const std::string& json_text);

UtilityFn parse_utility(const nlohmann::json& spec, const std::string& field_path);

nlohmann::json json_from_complex(const Complex& z);
nlohmann::json json_from_state(const StateVector& v);
nlohmann::json json_from_operator(const Operator& op);
Operator operator_from_json(const nlohmann::json& doc, const std::string& field_path);

}  // namespace qdm
