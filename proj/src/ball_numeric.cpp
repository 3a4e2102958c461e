// Floating-point side of the ball model: the two extension representations,
// branch splitting near the boundary, adapted metrics and the mode
// eigen-equation.

#include <array>
#include <cmath>
#include <numbers>

#include "sharptrace/ballmodel.hpp"
#include "sharptrace/errors.hpp"

namespace sharptrace::ball {

namespace {

using specfun::QuadDomain;

constexpr long double kPi = std::numbers::pi_v<long double>;

long double lgam(long double x) { return std::lgamma(x); }

bool twice_gamma_is_integer(const ModelParams& p) { return p.gamma_exact.has_value(); }

// 2F1 on [0, 1) that tolerates an integer c - a - b by summing the plain
// series, which still converges geometrically below z = 1.
double hyp2f1_any(double a, double b, double c, double z) {
  const double d = c - a - b;
  if (z > 0.5 && z < 1.0 && std::fabs(d - std::nearbyint(d)) < 1e-12) return specfun::hyp2f1_series(a, b, c, z);
  return specfun::hyp2f1(a, b, c, z);
}

// Gamma(gamma+1/2) Gamma(l+n/2+gamma) / (Gamma(2 gamma) Gamma(l+(n+1)/2)).
long double phi_prefactor(const ModelParams& p, int l) {
  const long double g = p.gamma;
  const long double n = p.n;
  return std::exp(lgam(g + 0.5L) + lgam(l + n / 2 + g) - lgam(2 * g) - lgam(l + (n + 1) / 2));
}

// Gamma((n-1)/2) Gamma(n/2) Gamma(1/2) / Gamma(n-1) (4 pi)^{(n-1)/2}, shared
// by both closed forms of the kernel eigenvalue.
long double kernel_prefactor(int n) {
  const long double nn = n;
  return std::pow(4 * kPi, (nn - 1) / 2) *
         std::exp(lgam((nn - 1) / 2) + lgam(nn / 2) + lgam(0.5L) - lgam(nn - 1));
}

}  // namespace

double phi_value(const ModelParams& params, int l, double u) {
  if (l < 0) fail(ErrorKind::Usage, "harmonic degree must be nonnegative");
  if (!(u >= 0.0 && u <= 1.0)) fail(ErrorKind::Domain, "phi_l needs u = r^2 in [0, 1]");
  if (params.is_half_odd()) return phi_profile(params, l).even.eval(u);
  params.validate(false);
  const double n = params.n;
  const double g = params.gamma;
  const double f = specfun::hyp2f1(l + n / 2 - g, 0.5 - g, l + (n + 1) / 2, u);
  return static_cast<double>(phi_prefactor(params, l) * f);
}

double phi_derivative(const ModelParams& params, int l, double u, int k) {
  if (k < 0) fail(ErrorKind::Usage, "derivative order must be nonnegative");
  if (k == 0) return phi_value(params, l, u);
  if (!(u >= 0.0 && u <= 1.0)) fail(ErrorKind::Domain, "phi_l needs u = r^2 in [0, 1]");
  if (params.is_half_odd()) {
    Poly p = phi_profile(params, l).even;
    for (int i = 0; i < k; ++i) p = p.derivative();
    return p.eval(u);
  }
  params.validate(false);
  const double n = params.n;
  const double g = params.gamma;
  const double f = specfun::hyp2f1_derivative(l + n / 2 - g, 0.5 - g, l + (n + 1) / 2, u, k);
  return static_cast<double>(phi_prefactor(params, l) * f);
}

// ---------------------------------------------------------------------------

double poisson_extend(const std::function<double(double)>& f, double r, double c, const ModelParams& params,
                      const PoissonOptions& opts) {
  params.validate(true);
  if (r < 0.0 || r >= 1.0) fail(ErrorKind::Domain, "extension radius must lie in [0, 1)");
  if (r > opts.max_radius) {
    fail(ErrorKind::Accuracy, "kernel quadrature is not trusted above r = " + std::to_string(opts.max_radius));
  }
  if (c < -1.0 || c > 1.0) fail(ErrorKind::Domain, "angle cosine must lie in [-1, 1]");

  const int n = params.n;
  const double s = params.s();
  const auto outer = specfun::quad_rule(QuadDomain::Sphere, n, opts.quad_order);
  const auto inner = specfun::quad_rule(QuadDomain::Jacobi, (n - 3) / 2.0, opts.quad_order);
  const double sc = std::sqrt(std::max(0.0, 1.0 - c * c));
  const double one_minus_r2 = 1.0 - r * r;

  const double total = outer.integrate([&](double t) {
    const double st = std::sqrt(std::max(0.0, 1.0 - t * t));
    const double ring = inner.integrate([&](double v) {
      const double dot = t * c + st * sc * v;
      return std::pow(one_minus_r2 / (2.0 * (1.0 - 2.0 * r * dot + r * r)), s);
    });
    return f(t) * ring;
  });

  const long double pre = std::pow(kPi, -n / 2.0L) *
                          std::exp(lgam(n / 2.0L + params.gamma) - lgam(static_cast<long double>(params.gamma))) *
                          specfun::sphere_area(n - 2);
  return static_cast<double>(pre * total);
}

double series_extend(const sphere::ZonalFunction& f, double r, double c, const ModelParams& params) {
  params.validate(true);
  if (r < 0.0 || r >= 1.0) fail(ErrorKind::Domain, "extension radius must lie in [0, 1)");
  if (f.n != params.n) fail(ErrorKind::Usage, "zonal data live on a different sphere");
  const double alpha = (params.n - 1) / 2.0;
  const double u = r * r;
  std::vector<double> terms(f.coeffs.size());
  for (std::size_t l = 0; l < terms.size(); ++l) {
    const int li = static_cast<int>(l);
    const double coef = f.coeffs[l];
    terms[l] = coef == 0.0 ? 0.0
                           : coef * specfun::gegenbauer(alpha, li, c) * phi_value(params, li, u) * std::pow(r, li);
  }
  const double rho = (1.0 - u) / 2.0;
  return std::pow(rho, params.n - params.s()) * specfun::pairwise_sum(terms);
}

PoissonEigenvalue poisson_kernel_eigenvalue(const ModelParams& params, int l, double r, int quad_order) {
  params.validate(true);
  if (r < 0.0 || r >= 1.0) fail(ErrorKind::Domain, "kernel radius must lie in [0, 1)");
  const int n = params.n;
  const long double g = params.gamma;
  const long double s = params.s();
  const long double pre = kernel_prefactor(n);
  const double u = r * r;
  const long double rl = std::pow(static_cast<long double>(r), l);

  PoissonEigenvalue out;
  out.quadrature =
      sphere::funk_hecke_lambda([&](double t) { return std::pow(1.0 - 2.0 * r * t + u, -static_cast<double>(s)); },
                                l, n, quad_order);
  const long double ratio = std::exp(lgam(n / 2.0L + g + l) - lgam(n / 2.0L + g) - lgam((n + 1) / 2.0L + l));
  out.series_form = static_cast<double>(
      pre * ratio * specfun::hyp2f1_series(static_cast<double>(g + 0.5L), n / 2.0 + l + params.gamma,
                                           l + (n + 1) / 2.0, u) *
      rl);
  const long double rho = (1.0L - u) / 2;
  out.phi_form = static_cast<double>(pre * std::pow(2.0L, -2 * g) *
                                     std::exp(lgam(2 * g) - lgam(g + 0.5L) - lgam(n / 2.0L + g)) *
                                     std::pow(rho, -2 * g) * phi_value(params, l, u) * rl);
  return out;
}

double SplitParts::combined(double rho, double gamma) const { return F_part + std::pow(rho, 2.0 * gamma) * H_part; }

SplitParts split_asymptotics(const ModelParams& params, int l, double rho) {
  params.validate(false);
  if (twice_gamma_is_integer(params)) {
    fail(ErrorKind::Domain, "branch splitting needs 2 gamma non-integer, got " + params.describe());
  }
  if (!(rho > 0.0 && rho < 0.5)) fail(ErrorKind::Domain, "branch splitting needs 0 < rho < 1/2");
  const double n = params.n;
  const double g = params.gamma;
  const double z = 2.0 * rho;
  SplitParts out;
  out.F_part = hyp2f1_any(l + n / 2 - g, 0.5 - g, 1.0 - 2.0 * g, z);
  const long double ratio = std::exp(lgam(l + n / 2 + g) - lgam(l + n / 2 - g));
  out.H_part = static_cast<double>(inverse_d_gamma(g) * ratio * hyp2f1_any(0.5 + g, l + n / 2 + g, 1.0 + 2.0 * g, z));
  return out;
}

double split_coefficient_unreduced(double gamma) {
  return std::pow(2.0, 2.0 * gamma) * std::tgamma(gamma + 0.5) * std::tgamma(-2.0 * gamma) /
         (std::tgamma(2.0 * gamma) * std::tgamma(0.5 - gamma));
}

double inverse_d_gamma(double gamma) {
  return std::tgamma(-gamma) / (std::pow(2.0, 2.0 * gamma) * std::tgamma(gamma));
}

// ---------------------------------------------------------------------------

Poly critical_sigma_polynomial(int n) {
  if (n < 3 || n % 2 == 0) fail(ErrorKind::Domain, "the critical factor exists for odd n >= 3 only");
  const int h = (n + 1) / 2;
  const Rational lead = frac(factorial(h - 1), factorial(n - 1));
  std::vector<Rational> c(static_cast<std::size_t>(h - 1) + 1);
  Rational two_k = 1;
  for (int k = 1; k <= h - 1; ++k) {
    two_k *= 2;
    c[static_cast<std::size_t>(k)] =
        lead * frac(factorial(n - k - 1), factorial(h - k - 1)) / Rational(k) * two_k;
  }
  return Poly(std::move(c));
}

AdaptedMetricFactor::AdaptedMetricFactor(ModelParams params) : params_(std::move(params)) {
  if (params_.is_critical()) {
    sigma_ = critical_sigma_polynomial(params_.n);
    return;
  }
  params_.validate(false);
  if (params_.is_half_odd()) exact_ = phi_rho_polynomial(params_, 0);
}

double AdaptedMetricFactor::psi(double rho) const {
  if (critical()) {
    fail(ErrorKind::Domain, "no psi_gamma at the critical order; use the exponential factor");
  }
  if (!(rho >= 0.0 && rho <= 0.5)) fail(ErrorKind::Domain, "rho must lie in [0, 1/2]");
  if (exact_) return exact_->eval(rho);
  return phi_value(params_, 0, 1.0 - 2.0 * rho);
}

double AdaptedMetricFactor::conformal_factor(double rho) const {
  if (!(rho >= 0.0 && rho <= 0.5)) fail(ErrorKind::Domain, "rho must lie in [0, 1/2]");
  if (sigma_) return std::exp(2.0 * sigma_->eval(rho));
  return std::pow(psi(rho), 4.0 / (params_.n - 2.0 * params_.gamma));
}

double adapted_metric_factor(const ModelParams& params, double rho) {
  const AdaptedMetricFactor f(params);
  return f.critical() ? f.conformal_factor(rho) : f.psi(rho);
}

double psi_split_form(const ModelParams& params, double rho) {
  return split_asymptotics(params, 0, rho).combined(rho, params.gamma);
}

double dimension_continuity_limit(int n, double rho) {
  if (n < 3 || n % 2 == 0) fail(ErrorKind::Domain, "the dimension limit is taken at odd n >= 3");
  if (!(rho > 0.0 && rho <= 0.5)) fail(ErrorKind::Domain, "rho must lie in (0, 1/2]");
  const int m = (n - 1) / 2;

  // psi(n') - 1 in long double; it vanishes at n' = n, so the logarithm is
  // taken with log1p.
  auto power = [&](long double delta) {
    const long double a = delta / 2;  // (n' - 1)/2 - m
    long double term = 1;
    long double excess = 0;
    for (int k = 0; k < m; ++k) {
      term *= (a + k) * (k - m) / ((k - 2.0L * m) * (k + 1)) * (2.0L * rho);
      excess += term;
    }
    return std::exp(4 / delta * std::log1p(excess));
  };

  constexpr int kLevels = 6;
  std::array<std::array<long double, kLevels>, kLevels> table{};
  long double delta = 0.02L;
  for (int i = 0; i < kLevels; ++i, delta /= 2) {
    table[i][0] = power(delta);
    long double scale = 1;
    for (int j = 1; j <= i; ++j) {
      scale *= 2;
      table[i][j] = table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (scale - 1);
    }
  }
  return static_cast<double>(table[kLevels - 1][kLevels - 1]);
}

Poly tau_residual(int n) {
  const Poly sigma = critical_sigma_polynomial(n);
  const Poly rho = Poly::variable();
  const Poly one = Poly::constant(1);
  const Poly w = one - Rational(2) * rho;  // 1 - 2 rho
  // Delta_g u = (1 - 2 rho) A - (n+1) rho B - (n-1)(1 - 2 rho) B with
  // A = rho^2 u'' and B = rho u'.
  auto lap = [&](const Poly& A, const Poly& B) {
    return w * A - Rational(n + 1) * (rho * B) - Rational(n - 1) * (w * B);
  };
  const Poly a_sigma = sigma.derivative().derivative().shifted(2);
  const Poly b_sigma = sigma.derivative().shifted(1);
  // ln rho: rho^2 (ln rho)'' = -1, rho (ln rho)' = 1.
  const Poly lap_log = lap(Poly::constant(-1), one);
  return -(lap(a_sigma, b_sigma) + lap_log) - Poly::constant(Rational(n));
}

// ---------------------------------------------------------------------------

ModeEigenResidual verify_mode_eigen(const ModelParams& params, int l) {
  params.validate(params.is_half_odd());
  const int n = params.n;
  ModeEigenResidual out;
  if (params.is_half_odd()) {
    const Poly phi = phi_profile(params, l).even;
    const Rational mu = params.m();
    const Poly u = Poly::variable();
    const Poly rho = frac(1, 2) * (Poly::constant(1) - u);
    const Poly rho2 = rho * rho;
    const Poly d1 = phi.derivative();
    const Poly d2 = d1.derivative();
    const Rational mm = mu * (mu + 1);
    const Poly bracket1 = rho2 * d2 + mu * (rho * d1) + (mm / 4) * phi;
    const Poly bracket2 = rho2 * d1 + (mu / 2) * (rho * phi);
    out.exact = Rational(4) * (u * bracket1) + Rational(2 * (n + 2 * l + 1)) * bracket2 - mm * phi;
  }
  const double mu = params.gamma - 0.5;
  for (int i = 1; i <= 9; ++i) {
    const double r = 0.1 * i;
    const double u = r * r;
    const double rho = (1.0 - u) / 2.0;
    const double p0 = phi_value(params, l, u);
    const double p1 = phi_derivative(params, l, u, 1);
    const double p2 = phi_derivative(params, l, u, 2);
    const double mm = mu * (mu + 1.0);
    const double res = 4.0 * u * (rho * rho * p2 + mu * rho * p1 + mm / 4.0 * p0) +
                       2.0 * (n + 2 * l + 1) * (rho * rho * p1 + mu / 2.0 * rho * p0) - mm * p0;
    out.numeric_max = std::max(out.numeric_max, std::fabs(res));
  }
  return out;
}

}  // namespace sharptrace::ball
