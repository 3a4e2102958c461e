#include "sharptrace/sharptrace.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "sharptrace/errors.hpp"
#include "sharptrace/halfspace.hpp"
#include "sharptrace/report.hpp"
#include "sharptrace/specfun.hpp"

struct st_report {
  sharptrace::report::Report report;
};

namespace {

using namespace sharptrace;

thread_local std::string g_last_error;

st_status code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Usage:
      return ST_ERR_USAGE;
    case ErrorKind::Domain:
      return ST_ERR_DOMAIN;
    case ErrorKind::UnsupportedRegime:
      return ST_ERR_UNSUPPORTED;
    case ErrorKind::Convergence:
      return ST_ERR_CONVERGENCE;
    case ErrorKind::Structural:
      return ST_ERR_STRUCTURAL;
    case ErrorKind::Accuracy:
      return ST_ERR_ACCURACY;
    case ErrorKind::Io:
      return ST_ERR_IO;
  }
  return ST_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes. Nothing escapes the
// C boundary.
template <class F>
st_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return ST_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return code_for(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown exception";
  }
  return ST_ERR_INTERNAL;
}

void require(const void* p, const char* what) {
  if (p == nullptr) fail(ErrorKind::Usage, std::string(what) + " must not be null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ball::Datum to_datum(const st_datum* d) {
  if (d == nullptr) return ball::Datum::constant();
  const std::string exponent = d->exponent ? d->exponent : "beckner";
  ball::ExponentChoice e;
  if (exponent == "beckner") {
    e = ball::ExponentChoice::Beckner;
  } else if (exponent == "printed") {
    e = ball::ExponentChoice::Printed;
  } else {
    fail(ErrorKind::Usage, "unknown exponent '" + exponent + "' (expected beckner or printed)");
  }
  const std::string kind = d->kind ? d->kind : "const";
  if (kind == "const" || kind == "constant") return ball::Datum::constant();
  if (kind == "extremal") return ball::Datum::extremal(d->x0, e);
  if (kind == "perturbed") return ball::Datum::perturbed(d->x0, d->amplitude, d->mode, e);
  fail(ErrorKind::Usage, "unknown datum '" + kind + "' (expected const, extremal or perturbed)");
}

}  // namespace

extern "C" {

const char* st_version(void) { return report::version(); }

const char* st_last_error_message(void) { return g_last_error.c_str(); }

void st_free_string(char* s) { std::free(s); }

st_status st_suite_config_init(st_suite_config* cfg) {
  return guarded([&] {
    require(cfg, "cfg");
    const report::SuiteConfig d;
    cfg->suite = "all";
    cfg->n_min = d.n_min;
    cfg->n_max = d.n_max;
    cfg->m_min = d.m_min;
    cfg->m_max = d.m_max;
    cfg->l_max = d.l_max;
    cfg->quad_order = d.quad_order;
    cfg->truncation = d.truncation;
    cfg->exact = 1;
    cfg->numeric = 1;
    cfg->workers = 0;
    cfg->timestamp = 1;
  });
}

st_status st_run_suite(const st_suite_config* cfg, st_report** out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    *out = nullptr;
    report::SuiteConfig c;
    c.suite = cfg->suite ? cfg->suite : "all";
    c.n_min = cfg->n_min;
    c.n_max = cfg->n_max;
    c.m_min = cfg->m_min;
    c.m_max = cfg->m_max < 0 ? -1 : cfg->m_max;
    c.l_max = cfg->l_max;
    c.quad_order = cfg->quad_order;
    c.truncation = cfg->truncation;
    c.exact = cfg->exact != 0;
    c.numeric = cfg->numeric != 0;
    c.workers = report::resolve_workers(cfg->workers);
    c.timestamp = cfg->timestamp != 0;
    auto* r = new st_report{report::run_suite(c)};
    *out = r;
  });
}

st_status st_report_render(const st_report* r, st_format format, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    report::Format f;
    switch (format) {
      case ST_FORMAT_JSON:
        f = report::Format::Json;
        break;
      case ST_FORMAT_CSV:
        f = report::Format::Csv;
        break;
      case ST_FORMAT_TEXT:
        f = report::Format::Text;
        break;
      default:
        fail(ErrorKind::Usage, "unknown format");
    }
    *out = dup_string(report::render(r->report, f));
  });
}

st_status st_report_summary(const st_report* r, st_summary* out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    const auto s = r->report.summary();
    *out = {s.pass, s.fail, s.flagged};
  });
}

int st_report_exit_code(const st_report* r) { return r ? r->report.exit_code() : 1; }

void st_report_free(st_report* r) { delete r; }

st_status st_ineq_trace(int n, int m, const st_datum* datum, int quad_order, int truncation, char** json_out) {
  return guarded([&] {
    require(json_out, "json_out");
    const auto rep = ball::trace_inequality_report(ball::ModelParams::half_odd(n, m), to_datum(datum),
                                                   {quad_order, truncation});
    *json_out = dup_string(report::to_json(rep).dump(2) + "\n");
  });
}

st_status st_ineq_lebedev_milin(int n, const st_datum* datum, int quad_order, int truncation, char** json_out) {
  return guarded([&] {
    require(json_out, "json_out");
    const auto rep = ball::lebedev_milin_report(n, to_datum(datum), {quad_order, truncation});
    *json_out = dup_string(report::to_json(rep).dump(2) + "\n");
  });
}

st_status st_ineq_halfspace(int n, int m, double sigma, char** json_out) {
  return guarded([&] {
    require(json_out, "json_out");
    *json_out = dup_string(report::to_json(halfspace::halfspace_trace_report(n, m, sigma)).dump(2) + "\n");
  });
}

st_status st_metric_table(int n, double gamma, int samples, char** csv_out) {
  return guarded([&] {
    require(csv_out, "csv_out");
    const auto params = ball::ModelParams::numeric(n, gamma);
    params.validate(true);
    *csv_out = dup_string(report::metric_csv(report::metric_table(params, samples)));
  });
}

st_status st_hyp2f1(double a, double b, double c, double z, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = specfun::hyp2f1(a, b, c, z);
  });
}

st_status st_gegenbauer(double alpha, int k, double t, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = specfun::gegenbauer(alpha, k, t);
  });
}

st_status st_gjms_symbol(int n, double gamma, int l, double* out) {
  return guarded([&] {
    require(out, "out");
    if (l < 0) fail(ErrorKind::Usage, "degree l must be nonnegative");
    const auto params = ball::ModelParams::numeric(n, gamma);
    params.validate(true);
    *out = sphere::gjms_symbol(params)(l);
  });
}

st_status st_adapted_metric_factor(int n, double gamma, double rho, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = ball::adapted_metric_factor(ball::ModelParams::numeric(n, gamma), rho);
  });
}

}  // extern "C"
