#pragma once

// Verification suites and their reports. A suite is a list of independent
// tasks; each task yields one or more checks. Tasks run on a bounded worker
// pool and results are assembled in task order, so the report does not
// depend on the worker count.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sharptrace/ballmodel.hpp"

namespace sharptrace::report {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Flagged };
std::string to_string(Status s);

struct Check {
  std::string name;
  std::string paper_ref;  // descriptive identity tag, see README coverage table
  Status status = Status::Pass;
  Json residual;          // "0", "3/16" for exact checks, a number otherwise
  Json tolerance;         // "exact" or a number
  std::optional<double> runtime_ms;
  Json details = Json::object();
};

struct SuiteConfig {
  std::string suite = "all";  // specfun | ball | halfspace | inequality | all
  int n_min = 4;
  int n_max = 7;
  int m_min = 0;
  int m_max = -1;  // -1: no upper bound beyond 2m+1 < n
  int l_max = 8;
  int quad_order = 200;
  int truncation = 40;
  bool exact = true;
  bool numeric = true;
  int workers = 1;
  bool timestamp = true;

  /// (n, m) pairs with 2m+1 < n inside the configured ranges.
  std::vector<std::pair<int, int>> grid() const;
  /// Usage error on an unknown suite, inverted ranges, an empty grid or a
  /// nonpositive worker count.
  void validate() const;
  /// Echo for the report. The worker count is left out so the output does
  /// not change with it.
  Json to_json() const;
};

struct Summary {
  int pass = 0;
  int fail = 0;
  int flagged = 0;
};

struct Report {
  std::string suite;
  std::string version;
  std::optional<std::string> timestamp;
  Json config;
  std::vector<Check> checks;

  Summary summary() const;
  /// 0 when nothing failed, 1 otherwise.
  int exit_code() const;
};

enum class Format { Json, Csv, Text };
std::optional<Format> parse_format(const std::string& s);

std::string render(const Report& r, Format f);
Json to_json(const Report& r);

/// Runs `tasks` on up to `workers` threads; output order matches input order.
/// A task that throws becomes a single failed check carrying the message.
std::vector<Check> run_tasks(const std::vector<std::function<std::vector<Check>()>>& tasks, int workers,
                             bool timestamp);

Report run_suite(const SuiteConfig& cfg);

/// Library version string.
const char* version();

/// Worker count: explicit flag value if positive, else SHARPTRACE_WORKERS,
/// else the hardware concurrency (at least 1).
int resolve_workers(int flag_value);

// Serialisations of single results, shared by the CLI and the C API.
Json to_json(const ball::InequalityReport& r);

struct MetricRow {
  double rho = 0.0;
  double psi = 0.0;  // NaN in the critical regime
  double factor = 0.0;
};
/// rho_i = 0.5 (i+1) / samples, i = 0..samples-1.
std::vector<MetricRow> metric_table(const ball::ModelParams& params, int samples);
std::string metric_csv(const std::vector<MetricRow>& rows);

/// Shortest decimal that round-trips; "nan" for NaN.
std::string format_double(double v);

}  // namespace sharptrace::report
