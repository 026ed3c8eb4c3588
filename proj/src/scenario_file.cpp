#include "qdm/scenario_file.hpp"

namespace qdm {

namespace {

using nlohmann::json;

const json& get_field(const json& doc, const std::string& key, const std::string& path) {
    if (!doc.is_object()) throw SchemaError(path, "expected an object");
    auto it = doc.find(key);
    if (it == doc.end()) throw SchemaError(path + "." + key, "missing required field");
    return *it;
}

double get_number(const json& doc, const std::string& key, const std::string& path) {
    const json& field = get_field(doc, key, path);
    if (!field.is_number()) throw SchemaError(path + "." + key, "expected a number");
    return field.get<double>();
}

double get_number_or(const json& doc, const std::string& key, const std::string& path,
                     double fallback) {
    if (!doc.is_object() || !doc.contains(key)) return fallback;
    return get_number(doc, key, path);
}

std::string get_string(const json& doc, const std::string& key, const std::string& path) {
    const json& field = get_field(doc, key, path);
    if (!field.is_string()) throw SchemaError(path + "." + key, "expected a string");
    return field.get<std::string>();
}

void check_unit_interval(double value, const std::string& path) {
    if (value < 0.0 || value > 1.0) throw SchemaError(path, "must lie in [0,1]");
}

TwoUrnParams parse_two_urn(const json& params) {
    TwoUrnParams out;
    out.scenario.payoff_high = get_number_or(params, "payoff_high", "parameters", 100.0);
    out.scenario.payoff_low = get_number_or(params, "payoff_low", "parameters", 0.0);
    if (out.scenario.payoff_high <= out.scenario.payoff_low)
        throw SchemaError("parameters.payoff_high", "must exceed payoff_low");
    out.alpha = get_number(params, "alpha", "parameters");
    if (out.alpha < 0.0 || out.alpha >= 0.5)
        throw SchemaError("parameters.alpha", "must lie in [0, 0.5)");
    const json& rates = get_field(params, "observed_rates", "parameters");
    out.rate_12 = get_number(rates, "f2_over_f1", "parameters.observed_rates");
    out.rate_34 = get_number(rates, "f4_over_f3", "parameters.observed_rates");
    check_unit_interval(out.rate_12, "parameters.observed_rates.f2_over_f1");
    check_unit_interval(out.rate_34, "parameters.observed_rates.f4_over_f3");
    if (params.contains("phases_deg")) {
        const json& phases = params.at("phases_deg");
        out.phases.theta_m_deg = get_number_or(phases, "theta_m", "parameters.phases_deg", 90.0);
        out.phases.phi_m_deg = get_number_or(phases, "phi_m", "parameters.phases_deg", 0.0);
        out.phases.theta_n_deg = get_number_or(phases, "theta_n", "parameters.phases_deg", 270.0);
        out.phases.phi_n_deg = get_number_or(phases, "phi_n", "parameters.phases_deg", 0.0);
    }
    out.phases = out.phases.normalized();
    if (params.contains("utility"))
        out.scenario.utility = parse_utility(params.at("utility"), "parameters.utility");
    return out;
}

GainLossParams parse_gain_loss(const json& params, ScenarioKind kind) {
    GainLossParams out;
    out.scenario.kind = kind;
    out.scenario.p_bar = get_number(params, "p_bar", "parameters");
    check_unit_interval(out.scenario.p_bar, "parameters.p_bar");
    out.scenario.delta = get_number(params, "delta", "parameters");
    if (out.scenario.delta < 0.0) throw SchemaError("parameters.delta", "must be >= 0");
    if (out.scenario.p_bar - out.scenario.delta < 0.0 ||
        out.scenario.p_bar + out.scenario.delta > 1.0)
        throw SchemaError("parameters.delta", "[p_bar - delta, p_bar + delta] leaves [0,1]");
    out.scenario.payoff =
        get_number_or(params, "payoff", "parameters", kind == ScenarioKind::Gain ? 1.0 : -1.0);
    if (params.contains("benchmark")) {
        const json& bench = params.at("benchmark");
        out.scenario.benchmark.label = get_string(bench, "label", "parameters.benchmark");
        out.scenario.benchmark.value = get_number(bench, "value", "parameters.benchmark");
    }
    if (params.contains("observed_risky_rate")) {
        const double rate = get_number(params, "observed_risky_rate", "parameters");
        check_unit_interval(rate, "parameters.observed_risky_rate");
        out.scenario.observed_risky_rate = rate;
    }
    out.alpha = get_number(params, "alpha", "parameters");
    if (out.alpha < 0.0 || out.alpha > out.scenario.delta)
        throw SchemaError("parameters.alpha", "must lie in [0, delta]");
    out.phase_deg = normalize_deg(get_number_or(params, "phase_deg", "parameters", 90.0));
    if (params.contains("utility"))
        out.scenario.utility = parse_utility(params.at("utility"), "parameters.utility");
    try {
        out.scenario.validate();
    } catch (const std::invalid_argument& err) {
        throw SchemaError("parameters", err.what());
    }
    return out;
}

}  // namespace

UtilityFn parse_utility(const nlohmann::json& spec, const std::string& field_path) {
    const std::string type = get_string(spec, "type", field_path);
    if (type == "identity") return UtilityFn::identity();
    if (type == "affine") {
        const double a = get_number(spec, "a", field_path);
        const double b = get_number(spec, "b", field_path);
        if (a <= 0.0) throw SchemaError(field_path + ".a", "affine slope must be positive");
        return UtilityFn::affine(a, b);
    }
    throw SchemaError(field_path + ".type", "unknown utility type '" + type + "'");
}

ScenarioFile parse_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& err) {
        throw SchemaError("(document)", std::string("invalid JSON: ") + err.what());
    }
    ScenarioFile file;
    file.raw = doc;
    file.schema_version = get_string(doc, "schema_version", "(document)");
    if (file.schema_version != "1.0")
        throw SchemaError("schema_version",
                          "unsupported version '" + file.schema_version + "' (expected 1.0)");
    if (doc.contains("provenance") && doc.at("provenance").is_string())
        file.provenance = doc.at("provenance").get<std::string>();
    const std::string kind = get_string(doc, "kind", "(document)");
    const json& params = get_field(doc, "parameters", "(document)");
    if (kind == "TWO_URN")
        file.params = parse_two_urn(params);
    else if (kind == "GAIN")
        file.params = parse_gain_loss(params, ScenarioKind::Gain);
    else if (kind == "LOSS")
        file.params = parse_gain_loss(params, ScenarioKind::Loss);
    else
        throw SchemaError("kind", "expected TWO_URN, GAIN or LOSS, got '" + kind + "'");
    return file;
}

nlohmann::json json_from_complex(const Complex& z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

nlohmann::json json_from_state(const StateVector& v) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(json_from_complex(v[i]));
    return out;
}

nlohmann::json json_from_operator(const Operator& op) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < op.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < op.dim(); ++j) row.push_back(json_from_complex(op.at(i, j)));
        out.push_back(row);
    }
    return out;
}

Operator operator_from_json(const nlohmann::json& doc, const std::string& field_path) {
    const nlohmann::json& rows = doc.is_object() && doc.contains("entries") ? doc.at("entries") : doc;
    if (!rows.is_array() || rows.empty())
        throw SchemaError(field_path, "expected a non-empty array of matrix rows");
    const std::size_t dim = rows.size();
    Operator op(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const nlohmann::json& row = rows.at(i);
        if (!row.is_array() || row.size() != dim)
            throw SchemaError(field_path, "matrix must be square");
        for (std::size_t j = 0; j < dim; ++j) {
            const nlohmann::json& cell = row.at(j);
            if (cell.is_number()) {
                op.at(i, j) = Complex(cell.get<double>(), 0.0);
            } else if (cell.is_array() && cell.size() == 2 && cell.at(0).is_number() &&
                       cell.at(1).is_number()) {
                op.at(i, j) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
            } else {
                throw SchemaError(field_path, "entries must be numbers or [re, im] pairs");
            }
        }
    }
    return op;
}

}  // namespace qdm
