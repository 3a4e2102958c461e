// Command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 when every check passed or was flagged, 1 when a check
// failed, 2 for usage and I/O errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sharptrace/sharptrace.h"

namespace {

constexpr int kExitUsage = 2;

struct CString {
  char* p = nullptr;
  ~CString() { st_free_string(p); }
};

struct ReportDeleter {
  void operator()(st_report* r) const { st_report_free(r); }
};

int report_error(st_status s) {
  std::cerr << "sharptrace: " << st_last_error_message() << " (status " << static_cast<int>(s) << ")\n";
  return kExitUsage;
}

// Writes to `path`, or stdout when it is empty. False on any I/O failure.
bool emit(const std::string& path, const char* text) {
  if (path.empty() || path == "-") {
    std::fputs(text, stdout);
    return std::fflush(stdout) == 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  out.close();
  return static_cast<bool>(out);
}

int emit_or_fail(const std::string& path, const char* text) {
  if (emit(path, text)) return 0;
  std::cerr << "sharptrace: cannot write '" << path << "'\n";
  return kExitUsage;
}

struct VerifyOptions {
  std::string suite;
  int n_min = 4;
  int n_max = 7;
  int m_min = 0;
  int m_max = -1;
  int l_max = 8;
  int quad_order = 200;
  int truncation = 40;
  bool exact_only = false;
  bool numeric_only = false;
  int workers = 0;
  std::string format = "json";
  std::string output;
  bool no_timestamp = false;
};

int run_verify(const VerifyOptions& o) {
  st_suite_config cfg;
  if (st_status s = st_suite_config_init(&cfg); s != ST_OK) return report_error(s);
  cfg.suite = o.suite.c_str();
  cfg.n_min = o.n_min;
  cfg.n_max = o.n_max;
  cfg.m_min = o.m_min;
  cfg.m_max = o.m_max;
  cfg.l_max = o.l_max;
  cfg.quad_order = o.quad_order;
  cfg.truncation = o.truncation;
  cfg.exact = o.numeric_only ? 0 : 1;
  cfg.numeric = o.exact_only ? 0 : 1;
  cfg.workers = o.workers;
  cfg.timestamp = o.no_timestamp ? 0 : 1;

  st_format fmt = ST_FORMAT_JSON;
  if (o.format == "csv") fmt = ST_FORMAT_CSV;
  if (o.format == "text") fmt = ST_FORMAT_TEXT;

  st_report* raw = nullptr;
  if (st_status s = st_run_suite(&cfg, &raw); s != ST_OK) return report_error(s);
  std::unique_ptr<st_report, ReportDeleter> report(raw);

  CString text;
  if (st_status s = st_report_render(report.get(), fmt, &text.p); s != ST_OK) return report_error(s);
  if (int rc = emit_or_fail(o.output, text.p); rc != 0) return rc;

  st_summary sum{};
  st_report_summary(report.get(), &sum);
  std::cerr << o.suite << ": " << sum.pass << " passed, " << sum.fail << " failed, " << sum.flagged << " flagged\n";
  return st_report_exit_code(report.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric verification of sharp higher-order Sobolev trace inequalities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(st_version()));

  // verify ------------------------------------------------------------------
  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and write a report");
  verify->add_option("suite", vo.suite, "specfun, ball, halfspace, inequality or all")
      ->required()
      ->check(CLI::IsMember({"specfun", "ball", "halfspace", "inequality", "all"}));
  verify->add_option("--n-min", vo.n_min, "Smallest dimension n in the grid")->capture_default_str();
  verify->add_option("--n-max", vo.n_max, "Largest dimension n in the grid")->capture_default_str();
  verify->add_option("--m-min", vo.m_min, "Smallest order index m")->capture_default_str();
  verify->add_option("--m-max", vo.m_max, "Largest order index m (-1: up to 2m+1 < n)")->capture_default_str();
  verify->add_option("--l-max", vo.l_max, "Largest spherical harmonic degree")->capture_default_str();
  verify->add_option("--quad-order", vo.quad_order, "Gauss rule order")->capture_default_str();
  verify->add_option("--truncation", vo.truncation, "Gegenbauer series truncation L")->capture_default_str();
  auto* exact_flag = verify->add_flag("--exact-only", vo.exact_only, "Skip floating-point checks");
  verify->add_flag("--numeric-only", vo.numeric_only, "Skip exact checks")->excludes(exact_flag);
  verify->add_option("--workers", vo.workers, "Worker threads (default: SHARPTRACE_WORKERS, then all cores)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", vo.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  verify->add_option("-o,--output", vo.output, "Output file (default: stdout)");
  verify->add_flag("--no-timestamp", vo.no_timestamp, "Omit the timestamp and runtimes for byte-stable output");

  // ineq --------------------------------------------------------------------
  auto* ineq = app.add_subcommand("ineq", "Evaluate one inequality and print a JSON report");
  ineq->require_subcommand(1);

  struct {
    int n = 5;
    int m = 1;
    std::string datum = "extremal";
    double x0 = 0.3;
    double amplitude = 0.05;
    int mode = 2;
    std::string exponent = "beckner";
    int quad_order = 200;
    int truncation = 40;
    double sigma = 1.0;
    std::string output;
  } io;

  auto add_datum_options = [&io](CLI::App* sub) {
    sub->add_option("--datum", io.datum, "const, extremal or perturbed")
        ->check(CLI::IsMember({"const", "extremal", "perturbed"}))
        ->capture_default_str();
    sub->add_option("--x0", io.x0, "|x0| of the extremal datum, in [0, 1)")->capture_default_str();
    sub->add_option("--amplitude", io.amplitude, "Perturbation amplitude")->capture_default_str();
    sub->add_option("--mode", io.mode, "Gegenbauer degree of the perturbation")->capture_default_str();
    sub->add_option("--quad-order", io.quad_order, "Gauss rule order")->capture_default_str();
    sub->add_option("--truncation", io.truncation, "Gegenbauer series truncation L")->capture_default_str();
  };

  auto* trace = ineq->add_subcommand("trace", "Sharp trace inequality on the ball");
  trace->add_option("--n", io.n, "Dimension of the boundary sphere")->required();
  trace->add_option("--m", io.m, "Order index, gamma = m + 1/2")->required();
  add_datum_options(trace);
  trace->add_option("--exponent-choice", io.exponent, "beckner or printed")
      ->check(CLI::IsMember({"beckner", "printed"}))
      ->capture_default_str();
  trace->add_option("-o,--output", io.output, "Output file (default: stdout)");

  auto* lm = ineq->add_subcommand("lebedev-milin", "Exponential inequality at the critical order");
  lm->add_option("--n", io.n, "Odd dimension n >= 3")->required();
  add_datum_options(lm);
  lm->add_option("-o,--output", io.output, "Output file (default: stdout)");

  auto* half = ineq->add_subcommand("halfspace", "Half-space trace inequality for a Gaussian");
  half->add_option("--n", io.n, "Boundary dimension")->required();
  half->add_option("--m", io.m, "Order index, 2m+1 < n")->required();
  half->add_option("--sigma", io.sigma, "Gaussian width")->capture_default_str();
  half->add_option("-o,--output", io.output, "Output file (default: stdout)");

  // metric ------------------------------------------------------------------
  int mn = 3;
  double mgamma = 0.5;
  int samples = 50;
  std::string moutput;
  auto* metric = app.add_subcommand("metric", "Sample the adapted metric factor to CSV");
  metric->add_option("--n", mn, "Dimension of the boundary sphere")->required();
  metric->add_option("--gamma", mgamma, "Order gamma in (0, n/2]")->required();
  metric->add_option("--samples", samples, "Number of rho samples in (0, 1/2]")->capture_default_str();
  metric->add_option("-o,--output", moutput, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (verify->parsed()) return run_verify(vo);

  auto emit_json = [&](st_status s, CString& out) {
    if (s != ST_OK) return report_error(s);
    return emit_or_fail(io.output, out.p);
  };
  const st_datum datum{io.datum.c_str(), io.x0, io.amplitude, io.mode, io.exponent.c_str()};
  if (trace->parsed()) {
    CString out;
    return emit_json(st_ineq_trace(io.n, io.m, &datum, io.quad_order, io.truncation, &out.p), out);
  }
  if (lm->parsed()) {
    CString out;
    return emit_json(st_ineq_lebedev_milin(io.n, &datum, io.quad_order, io.truncation, &out.p), out);
  }
  if (half->parsed()) {
    CString out;
    return emit_json(st_ineq_halfspace(io.n, io.m, io.sigma, &out.p), out);
  }
  if (metric->parsed()) {
    CString out;
    if (st_status s = st_metric_table(mn, mgamma, samples, &out.p); s != ST_OK) return report_error(s);
    return emit_or_fail(moutput, out.p);
  }
  return kExitUsage;
}
