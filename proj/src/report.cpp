#include "sharptrace/report.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "sharptrace/errors.hpp"

namespace sharptrace::report {

const char* version() { return "0.1.0"; }

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Flagged:
      return "flagged";
  }
  return "fail";
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------

std::vector<std::pair<int, int>> SuiteConfig::grid() const {
  std::vector<std::pair<int, int>> cells;
  for (int n = std::max(n_min, 2); n <= n_max; ++n) {
    for (int m = std::max(m_min, 0); 2 * m + 1 < n; ++m) {
      if (m_max >= 0 && m > m_max) break;
      cells.emplace_back(n, m);
    }
  }
  return cells;
}

void SuiteConfig::validate() const {
  static const std::vector<std::string> known = {"specfun", "ball", "halfspace", "inequality", "all"};
  if (std::find(known.begin(), known.end(), suite) == known.end()) {
    fail(ErrorKind::Usage, "unknown suite '" + suite + "'");
  }
  if (n_min > n_max) fail(ErrorKind::Usage, "empty n range");
  if (m_max >= 0 && m_min > m_max) fail(ErrorKind::Usage, "empty m range");
  if (l_max < 0) fail(ErrorKind::Usage, "l_max must be nonnegative");
  if (quad_order < 2) fail(ErrorKind::Usage, "quadrature order must be at least 2");
  if (truncation < 0) fail(ErrorKind::Usage, "series truncation must be nonnegative");
  if (workers < 1) fail(ErrorKind::Usage, "worker count must be at least 1");
  if (!exact && !numeric) fail(ErrorKind::Usage, "both exact and numeric checks are disabled");
  if (grid().empty()) {
    fail(ErrorKind::Usage, "parameter grid is empty: no m with 2m+1 < n for n in [" + std::to_string(n_min) + ", " +
                               std::to_string(n_max) + "]");
  }
}

Json SuiteConfig::to_json() const {
  Json j;
  j["suite"] = suite;
  j["n_range"] = {n_min, n_max};
  j["m_range"] = {m_min, m_max < 0 ? Json(nullptr) : Json(m_max)};
  j["l_max"] = l_max;
  j["quad_order"] = quad_order;
  j["truncation"] = truncation;
  j["exact"] = exact;
  j["numeric"] = numeric;
  return j;
}

Summary Report::summary() const {
  Summary s;
  for (const auto& c : checks) {
    switch (c.status) {
      case Status::Pass:
        ++s.pass;
        break;
      case Status::Fail:
        ++s.fail;
        break;
      case Status::Flagged:
        ++s.flagged;
        break;
    }
  }
  return s;
}

int Report::exit_code() const { return summary().fail > 0 ? 1 : 0; }

std::optional<Format> parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Json to_json(const Report& r) {
  Json j;
  j["suite"] = r.suite;
  j["version"] = r.version;
  if (r.timestamp) j["timestamp"] = *r.timestamp;
  j["config"] = r.config;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["paper_ref"] = c.paper_ref;
    cj["status"] = to_string(c.status);
    cj["residual"] = c.residual;
    cj["tolerance"] = c.tolerance;
    cj["runtime_ms"] = c.runtime_ms ? Json(*c.runtime_ms) : Json(nullptr);
    cj["details"] = c.details;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  const Summary s = r.summary();
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"flagged", s.flagged}};
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string scalar_text(const Json& j) {
  if (j.is_null()) return "";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_float()) return format_double(j.get<double>());
  return j.dump();
}

}  // namespace

std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::Json:
      return to_json(r).dump(2) + "\n";
    case Format::Csv: {
      std::string out = "name,paper_ref,status,residual,tolerance,runtime_ms,details\n";
      for (const auto& c : r.checks) {
        out += csv_field(c.name) + "," + csv_field(c.paper_ref) + "," + to_string(c.status) + "," +
               csv_field(scalar_text(c.residual)) + "," + csv_field(scalar_text(c.tolerance)) + "," +
               (c.runtime_ms ? format_double(*c.runtime_ms) : "") + "," + csv_field(c.details.dump()) + "\n";
      }
      return out;
    }
    case Format::Text: {
      std::ostringstream os;
      os << "suite " << r.suite << " (sharptrace " << r.version << ")\n";
      for (const auto& c : r.checks) {
        std::string tag = to_string(c.status);
        for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        os << "  [" << tag << "] " << c.name << "  residual=" << scalar_text(c.residual)
           << "  tol=" << scalar_text(c.tolerance) << "\n";
      }
      const Summary s = r.summary();
      os << s.pass << " passed, " << s.fail << " failed, " << s.flagged << " flagged\n";
      return os.str();
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

std::vector<Check> run_tasks(const std::vector<std::function<std::vector<Check>()>>& tasks, int workers,
                             bool timestamp) {
  std::vector<std::vector<Check>> results(tasks.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      try {
        results[i] = tasks[i]();
      } catch (const std::exception& e) {
        Check c;
        c.name = "task " + std::to_string(i);
        c.paper_ref = "harness";
        c.status = Status::Fail;
        c.residual = nullptr;
        c.tolerance = nullptr;
        c.details = {{"error", e.what()}};
        if (const auto* se = dynamic_cast<const Error*>(&e)) c.details["kind"] = to_string(se->kind());
        results[i] = {c};
      }
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      for (auto& c : results[i]) c.runtime_ms = timestamp ? std::optional<double>(ms) : std::nullopt;
    }
  };

  const int count = std::max(1, std::min<int>(workers, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<Check> out;
  for (auto& r : results) {
    for (auto& c : r) out.push_back(std::move(c));
  }
  return out;
}

int resolve_workers(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("SHARPTRACE_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 4096) {
      fail(ErrorKind::Usage, std::string("SHARPTRACE_WORKERS must be a positive integer, got '") + env + "'");
    }
    return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// ---------------------------------------------------------------------------

Json to_json(const ball::InequalityReport& r) {
  Json j;
  j["inequality"] = r.inequality;
  j["params"] = r.params;
  j["datum"] = r.datum;
  j["quadrature"] = {{"order", r.quad.order}, {"truncation", r.quad.truncation}};
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["sharp_constant"] = r.sharp_constant;
  j["ratio"] = r.ratio;
  Json b = Json::object();
  for (const auto& [k, v] : r.breakdown) b[k] = v;
  j["breakdown"] = b;
  Json e = Json::object();
  for (const auto& [k, v] : r.extras) e[k] = v;
  j["extras"] = e;
  j["warnings"] = r.warnings;
  return j;
}

std::vector<MetricRow> metric_table(const ball::ModelParams& params, int samples) {
  if (samples < 1) fail(ErrorKind::Usage, "sample count must be at least 1");
  const ball::AdaptedMetricFactor factor(params);
  std::vector<MetricRow> rows;
  rows.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    MetricRow row;
    row.rho = 0.5 * (i + 1) / samples;
    row.psi = factor.critical() ? std::numeric_limits<double>::quiet_NaN() : factor.psi(row.rho);
    row.factor = factor.conformal_factor(row.rho);
    rows.push_back(row);
  }
  return rows;
}

std::string metric_csv(const std::vector<MetricRow>& rows) {
  std::string out = "ρ,psi_gamma,conformal_factor\n";
  for (const auto& r : rows) {
    out += format_double(r.rho) + "," + format_double(r.psi) + "," + format_double(r.factor) + "\n";
  }
  return out;
}

}  // namespace sharptrace::report
