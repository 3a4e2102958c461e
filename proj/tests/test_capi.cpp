#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "sharptrace/sharptrace.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  st_free_string(s);
  return out;
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("version and errors") {
    CHECK(std::strlen(st_version()) > 0);
    CHECK(st_suite_config_init(nullptr) == ST_ERR_USAGE);
    CHECK(std::string(st_last_error_message()).find("null") != std::string::npos);
    double x = 0;
    CHECK(st_hyp2f1(0.5, 0.5, 1.5, 0.0, &x) == ST_OK);
    CHECK(std::string(st_last_error_message()).empty());
  }

  TEST_CASE("suite round trip") {
    st_suite_config cfg;
    REQUIRE(st_suite_config_init(&cfg) == ST_OK);
    cfg.suite = "halfspace";
    cfg.workers = 2;
    cfg.timestamp = 0;
    st_report* r = nullptr;
    REQUIRE(st_run_suite(&cfg, &r) == ST_OK);
    st_summary s{};
    CHECK(st_report_summary(r, &s) == ST_OK);
    CHECK(s.fail == 0);
    CHECK(s.pass > 0);
    CHECK(s.flagged > 0);
    CHECK(st_report_exit_code(r) == 0);
    char* text = nullptr;
    CHECK(st_report_render(r, ST_FORMAT_TEXT, &text) == ST_OK);
    CHECK(take(text).find("failed") != std::string::npos);
    CHECK(st_report_render(r, static_cast<st_format>(9), &text) == ST_ERR_USAGE);
    st_report_free(r);

    cfg.suite = "everything";
    CHECK(st_run_suite(&cfg, &r) == ST_ERR_USAGE);
    CHECK(r == nullptr);
    cfg.suite = "ball";
    cfg.n_min = 1;
    cfg.n_max = 1;
    CHECK(st_run_suite(&cfg, &r) == ST_ERR_USAGE);
  }

  TEST_CASE("inequality reports") {
    st_datum d{"extremal", 0.3, 0.0, 2, "beckner"};
    char* json = nullptr;
    REQUIRE(st_ineq_trace(5, 1, &d, 200, 40, &json) == ST_OK);
    CHECK(take(json).find("\"ratio\"") != std::string::npos);
    d.exponent = "whatever";
    CHECK(st_ineq_trace(5, 1, &d, 200, 40, &json) == ST_ERR_USAGE);
    CHECK(st_ineq_lebedev_milin(3, nullptr, 200, 40, &json) == ST_OK);
    take(json);
    CHECK(st_ineq_lebedev_milin(4, nullptr, 200, 40, &json) != ST_OK);
    CHECK(st_ineq_halfspace(7, 2, 1.5, &json) == ST_OK);
    take(json);
    CHECK(st_ineq_halfspace(5, 2, 1.0, &json) == ST_ERR_USAGE);
  }

  TEST_CASE("scalar entry points") {
    double v = 0;
    CHECK(st_gegenbauer(1.5, 1, 0.2, &v) == ST_OK);
    CHECK(v == doctest::Approx(0.6));
    CHECK(st_gjms_symbol(4, 1.5, 0, &v) == ST_OK);
    CHECK(v == doctest::Approx(15.0 / 8.0));
    CHECK(st_gjms_symbol(4, 2.5, 0, &v) == ST_ERR_DOMAIN);
    CHECK(st_adapted_metric_factor(3, 1.5, 0.2, &v) == ST_OK);
    CHECK(v == doctest::Approx(std::exp(0.4)));
    CHECK(st_hyp2f1(1, 1, 2, 0.7, &v) == ST_ERR_UNSUPPORTED);
    CHECK(st_hyp2f1(1, 1, 2, 0.7, nullptr) == ST_ERR_USAGE);

    char* csv = nullptr;
    CHECK(st_metric_table(5, 1.5, 3, &csv) == ST_OK);
    CHECK(take(csv).rfind("ρ,psi_gamma,conformal_factor\n", 0) == 0);
    CHECK(st_metric_table(5, 1.5, 0, &csv) == ST_ERR_USAGE);
  }
}
