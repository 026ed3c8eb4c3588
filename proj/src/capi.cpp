#include "qdm.h"

#include <exception>
#include <new>
#include <optional>
#include <string>

#include "qdm/report.hpp"
#include "qdm/scenario_file.hpp"

struct qdm_report {
    std::string json_text;
    std::string markdown_text;
    bool passed = false;
};

namespace {

thread_local std::string g_last_error;

int finish(qdm::ReportBundle bundle, qdm_report** out) {
    auto* report = new (std::nothrow) qdm_report;
    if (report == nullptr) {
        g_last_error = "out of memory";
        return QDM_ERR_INTERNAL;
    }
    report->json_text = bundle.doc.dump(2);
    report->json_text.push_back('\n');
    report->markdown_text = qdm::render_markdown(bundle.doc);
    report->passed = bundle.passed;
    *out = report;
    g_last_error.clear();
    return bundle.passed ? QDM_OK : QDM_ERR_CHECK_FAILED;
}

template <typename Fn>
int guarded(qdm_report** out, Fn&& fn) {
    if (out == nullptr) {
        g_last_error = "out must not be NULL";
        return QDM_ERR_INPUT;
    }
    *out = nullptr;
    try {
        return finish(fn(), out);
    } catch (const qdm::SchemaError& err) {
        g_last_error = err.what();
        return QDM_ERR_INPUT;
    } catch (const std::invalid_argument& err) {
        g_last_error = err.what();
        return QDM_ERR_INPUT;
    } catch (const std::exception& err) {
        g_last_error = err.what();
        return QDM_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return QDM_ERR_INTERNAL;
    }
}

int require_arg(const char* value, const char* name) {
    if (value != nullptr) return QDM_OK;
    g_last_error = std::string(name) + " must not be NULL";
    return QDM_ERR_INPUT;
}

}  // namespace

extern "C" {

int qdm_reproduce(const char* target, const char* data_dir, qdm_report** out) {
    if (int rc = require_arg(target, "target"); rc != QDM_OK) return rc;
    return guarded(out, [&] {
        return qdm::run_reproduce(target, qdm::resolve_data_dir(data_dir));
    });
}

int qdm_fit(const char* scenario_json, const double* alpha, const double* phase_deg,
            const char* data_dir, qdm_report** out) {
    if (int rc = require_arg(scenario_json, "scenario_json"); rc != QDM_OK) return rc;
    return guarded(out, [&] {
        std::optional<double> alpha_override, phase_override;
        if (alpha != nullptr) alpha_override = *alpha;
        if (phase_deg != nullptr) phase_override = *phase_deg;
        return qdm::run_fit(scenario_json, alpha_override, phase_override,
                            qdm::resolve_data_dir(data_dir));
    });
}

int qdm_simulate(const char* scenario_json, int n, uint64_t seed, const char* data_dir,
                 qdm_report** out) {
    if (int rc = require_arg(scenario_json, "scenario_json"); rc != QDM_OK) return rc;
    if (n <= 0) {
        g_last_error = "n must be positive";
        if (out != nullptr) *out = nullptr;
        return QDM_ERR_INPUT;
    }
    return guarded(out, [&] {
        return qdm::run_simulate(scenario_json, n, seed, qdm::resolve_data_dir(data_dir));
    });
}

int qdm_check_operator(const char* operator_json, double tol, qdm_report** out) {
    if (int rc = require_arg(operator_json, "operator_json"); rc != QDM_OK) return rc;
    if (!(tol > 0.0)) {
        g_last_error = "tol must be positive";
        if (out != nullptr) *out = nullptr;
        return QDM_ERR_INPUT;
    }
    return guarded(out, [&] { return qdm::run_check(operator_json, tol); });
}

const char* qdm_report_json(const qdm_report* report) {
    return report == nullptr ? "" : report->json_text.c_str();
}

const char* qdm_report_markdown(const qdm_report* report) {
    return report == nullptr ? "" : report->markdown_text.c_str();
}

int qdm_report_passed(const qdm_report* report) {
    return report != nullptr && report->passed ? 1 : 0;
}

void qdm_report_free(qdm_report* report) { delete report; }

const char* qdm_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
