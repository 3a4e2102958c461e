#include <doctest.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "sharptrace/errors.hpp"
#include "sharptrace/report.hpp"

using namespace sharptrace;
using namespace sharptrace::report;

namespace {

Report one_pass() {
  Report r;
  r.suite = "unit";
  r.version = version();
  r.config = Json::object();
  Check c;
  c.name = "identity";
  c.paper_ref = "unit/identity";
  c.residual = "0";
  c.tolerance = "exact";
  r.checks.push_back(c);
  return r;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("json rendering") {
    const std::string s = render(one_pass(), Format::Json);
    CHECK(s.find("\"status\": \"pass\"") != std::string::npos);
    CHECK(s.find("\"residual\": \"0\"") != std::string::npos);
    CHECK(s.find("timestamp") == std::string::npos);
    // fixed key order
    CHECK(s.find("\"suite\"") < s.find("\"version\""));
    CHECK(s.find("\"checks\"") < s.find("\"summary\""));
  }

  TEST_CASE("csv and text rendering") {
    Report r = one_pass();
    r.checks[0].details = {{"note", "a, b"}};
    const std::string csv = render(r, Format::Csv);
    CHECK(csv.rfind("name,paper_ref,status,residual,tolerance,runtime_ms,details\n", 0) == 0);
    CHECK(csv.find("\"{\"\"note\"\":\"\"a, b\"\"}\"") != std::string::npos);
    const std::string text = render(r, Format::Text);
    CHECK(text.find("1 passed, 0 failed, 0 flagged") != std::string::npos);
    CHECK(parse_format("yaml") == std::nullopt);
  }

  TEST_CASE("exit codes follow the summary") {
    Report r = one_pass();
    CHECK(r.exit_code() == 0);
    r.checks.push_back(r.checks[0]);
    r.checks.back().status = Status::Flagged;
    CHECK(r.exit_code() == 0);
    r.checks.back().status = Status::Fail;
    CHECK(r.exit_code() == 1);
    CHECK(r.summary().fail == 1);
  }

  TEST_CASE("task order is independent of the worker count") {
    std::vector<std::function<std::vector<Check>()>> tasks;
    for (int i = 0; i < 40; ++i) {
      tasks.push_back([i] {
        if (i == 7) throw Error(ErrorKind::Domain, "boom");
        Check c;
        c.name = "t" + std::to_string(i);
        return std::vector<Check>{c};
      });
    }
    const auto a = run_tasks(tasks, 1, false);
    const auto b = run_tasks(tasks, 6, false);
    REQUIRE(a.size() == 40);
    REQUIRE(b.size() == 40);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].name == b[i].name);
    CHECK(a[7].status == Status::Fail);
    CHECK(a[7].details["kind"] == "domain");
    CHECK_FALSE(a[0].runtime_ms.has_value());
    CHECK(run_tasks(tasks, 2, true)[0].runtime_ms.has_value());
  }

  TEST_CASE("config validation") {
    SuiteConfig c;
    CHECK_NOTHROW(c.validate());
    c.n_min = 1;
    c.n_max = 1;
    CHECK_THROWS_AS(c.validate(), Error);
    c = SuiteConfig{};
    c.suite = "nope";
    CHECK_THROWS_AS(c.validate(), Error);
    c = SuiteConfig{};
    c.workers = 0;
    CHECK_THROWS_AS(c.validate(), Error);
    c = SuiteConfig{};
    c.exact = false;
    c.numeric = false;
    CHECK_THROWS_AS(c.validate(), Error);
    c = SuiteConfig{};
    c.workers = 9;
    CHECK(c.to_json().dump().find("workers") == std::string::npos);
  }

  TEST_CASE("worker resolution") {
    ::unsetenv("SHARPTRACE_WORKERS");
    CHECK(resolve_workers(3) == 3);
    CHECK(resolve_workers(0) >= 1);
    ::setenv("SHARPTRACE_WORKERS", "5", 1);
    CHECK(resolve_workers(0) == 5);
    CHECK(resolve_workers(2) == 2);
    ::setenv("SHARPTRACE_WORKERS", "many", 1);
    CHECK_THROWS_AS(resolve_workers(0), Error);
    ::unsetenv("SHARPTRACE_WORKERS");
  }

  TEST_CASE("metric table") {
    const auto rows = metric_table(ball::ModelParams::half_odd(5, 1), 4);
    REQUIRE(rows.size() == 4);
    CHECK(rows.back().rho == 0.5);
    CHECK(rows[0].psi == doctest::Approx(1.0 + 0.125));
    const std::string csv = metric_csv(metric_table(ball::ModelParams::half_odd(3, 1), 2));
    CHECK(csv.rfind("ρ,psi_gamma,conformal_factor\n", 0) == 0);
    CHECK(csv.find(",nan,") != std::string::npos);
    CHECK(format_double(0.1) == "0.1");
  }

  TEST_CASE("suite runs are reproducible") {
    SuiteConfig c;
    c.suite = "halfspace";
    c.timestamp = false;
    const std::string a = render(run_suite(c), Format::Json);
    c.workers = 3;
    CHECK(render(run_suite(c), Format::Json) == a);
  }
}
