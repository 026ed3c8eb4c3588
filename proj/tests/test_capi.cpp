#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "qdm.h"

namespace {

constexpr const char* kGainScenario = R"({
  "schema_version": "1.0",
  "kind": "GAIN",
  "parameters": {
    "p_bar": 0.68, "delta": 0.21, "alpha": 0.05,
    "observed_risky_rate": 0.62, "phase_deg": 90.0
  }
})";

}  // namespace

TEST_CASE("reproduce through the C surface") {
    qdm_report* report = nullptr;
    const int code = qdm_reproduce("two-urn", nullptr, &report);
    REQUIRE(code == QDM_OK);
    REQUIRE(report != nullptr);
    CHECK(qdm_report_passed(report) == 1);

    const nlohmann::json doc = nlohmann::json::parse(qdm_report_json(report));
    CHECK(doc.at("command") == "reproduce");
    CHECK(doc.at("passed").get<bool>());
    CHECK(std::string(qdm_report_markdown(report)).find("# reproduce report") !=
          std::string::npos);
    qdm_report_free(report);
}

TEST_CASE("invalid target is an input error") {
    qdm_report* report = nullptr;
    CHECK(qdm_reproduce("bogus", nullptr, &report) == QDM_ERR_INPUT);
    CHECK(report == nullptr);
    CHECK(std::strlen(qdm_last_error()) > 0);
    CHECK(qdm_reproduce(nullptr, nullptr, &report) == QDM_ERR_INPUT);
    CHECK(qdm_reproduce("two-urn", nullptr, nullptr) == QDM_ERR_INPUT);
}

TEST_CASE("fit with overrides") {
    qdm_report* base = nullptr;
    REQUIRE(qdm_fit(kGainScenario, nullptr, nullptr, nullptr, &base) == QDM_OK);
    const nlohmann::json base_doc = nlohmann::json::parse(qdm_report_json(base));
    qdm_report_free(base);

    const double alpha = 0.02;
    qdm_report* shifted = nullptr;
    REQUIRE(qdm_fit(kGainScenario, &alpha, nullptr, nullptr, &shifted) == QDM_OK);
    const nlohmann::json shifted_doc = nlohmann::json::parse(qdm_report_json(shifted));
    qdm_report_free(shifted);

    CHECK(base_doc.at("results").at("final_state") != shifted_doc.at("results").at("final_state"));
    CHECK(shifted_doc.at("overrides").at("alpha").get<double>() == alpha);

    qdm_report* report = nullptr;
    CHECK(qdm_fit("{ broken", nullptr, nullptr, nullptr, &report) == QDM_ERR_INPUT);
    CHECK(report == nullptr);
}

TEST_CASE("simulate is deterministic per seed") {
    qdm_report* a = nullptr;
    qdm_report* b = nullptr;
    REQUIRE(qdm_simulate(kGainScenario, 200, 7, nullptr, &a) == QDM_OK);
    REQUIRE(qdm_simulate(kGainScenario, 200, 7, nullptr, &b) == QDM_OK);
    CHECK(std::string(qdm_report_json(a)) == qdm_report_json(b));
    qdm_report_free(a);
    qdm_report_free(b);

    qdm_report* report = nullptr;
    CHECK(qdm_simulate(kGainScenario, 0, 7, nullptr, &report) == QDM_ERR_INPUT);
    CHECK(report == nullptr);
}

TEST_CASE("operator check distinguishes pass from fail") {
    qdm_report* good = nullptr;
    CHECK(qdm_check_operator("[[1,0],[0,0]]", 1e-10, &good) == QDM_OK);
    CHECK(qdm_report_passed(good) == 1);
    qdm_report_free(good);

    qdm_report* bad = nullptr;
    CHECK(qdm_check_operator("[[0.5,0.5],[0.5,0.6]]", 1e-10, &bad) == QDM_ERR_CHECK_FAILED);
    REQUIRE(bad != nullptr);  // a failing check still yields a report
    CHECK(qdm_report_passed(bad) == 0);
    qdm_report_free(bad);

    qdm_report* report = nullptr;
    CHECK(qdm_check_operator("[[1,0],[0,0]]", 0.0, &report) == QDM_ERR_INPUT);
    CHECK(qdm_check_operator("not json", 1e-10, &report) == QDM_ERR_INPUT);
}

TEST_CASE("accessors tolerate null") {
    CHECK(std::string(qdm_report_json(nullptr)).empty());
    CHECK(std::string(qdm_report_markdown(nullptr)).empty());
    CHECK(qdm_report_passed(nullptr) == 0);
    qdm_report_free(nullptr);
}
