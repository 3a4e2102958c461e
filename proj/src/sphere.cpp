#include "sharptrace/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sharptrace/errors.hpp"

namespace sharptrace::sphere {

ModelParams ModelParams::half_odd(int n, int m) { return from_twice_gamma(n, 2 * m + 1); }

ModelParams ModelParams::from_twice_gamma(int n, int twice_gamma) {
  ModelParams p;
  p.n = n;
  p.gamma = twice_gamma / 2.0;
  p.gamma_exact = HalfInt::from_twice(twice_gamma);
  return p;
}

ModelParams ModelParams::numeric(int n, double gamma) {
  const double twice = 2.0 * gamma;
  if (std::fabs(twice - std::nearbyint(twice)) < 1e-14) {
    return from_twice_gamma(n, static_cast<int>(std::nearbyint(twice)));
  }
  ModelParams p;
  p.n = n;
  p.gamma = gamma;
  return p;
}

int ModelParams::m() const { return static_cast<int>(std::floor(gamma)); }

bool ModelParams::is_critical() const {
  return gamma_exact && n % 2 == 1 && gamma_exact->twice() == n;
}

void ModelParams::validate(bool allow_critical) const {
  if (n < 2) fail(ErrorKind::Domain, "sphere dimension n must be at least 2, got " + std::to_string(n));
  if (!(gamma > 0.0)) fail(ErrorKind::Domain, "gamma must be positive, got " + describe());
  const double half_n = n / 2.0;
  if (gamma > half_n || (!allow_critical && gamma >= half_n)) {
    fail(ErrorKind::Domain, "gamma outside (0, n/2" + std::string(allow_critical ? "]" : ")") + ": " + describe());
  }
}

std::string ModelParams::describe() const {
  std::ostringstream os;
  os << "n=" << n << ", gamma=";
  if (gamma_exact) {
    os << gamma_exact->to_string();
  } else {
    os.precision(17);
    os << gamma;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

SpectralSymbol gjms_symbol(const ModelParams& params) {
  SpectralSymbol sym;
  sym.tag = "P_2gamma(" + params.describe() + ")";
  const int n = params.n;
  if (params.gamma_exact) {
    const auto twice = params.gamma_exact->twice();
    // x - y = 2 gamma is an integer, so the ratio is (y)_{2 gamma}.
    sym.exact = [n, twice](int l) {
      const Rational y = frac(2 * l + n - static_cast<long>(twice), 2);
      return ExactScalar(pochhammer(y, static_cast<int>(twice)));
    };
    sym.numeric = [e = sym.exact](int l) { return e(l).to_double(); };
    return sym;
  }
  const double g = params.gamma;
  sym.numeric = [n, g](int l) {
    const double x = l + n / 2.0 + g;
    const double y = l + n / 2.0 - g;
    if (y <= 0 && y == std::floor(y)) {
      fail(ErrorKind::Domain, "GJMS symbol: Gamma pole at l = " + std::to_string(l));
    }
    const long double lr = std::lgamma(static_cast<long double>(x)) - std::lgamma(static_cast<long double>(y));
    double sign = 1.0;
    if (y < 0 && static_cast<long>(std::floor(y)) % 2 != 0) sign = -1.0;
    return sign * static_cast<double>(std::exp(lr));
  };
  return sym;
}

SpectralSymbol b_symbol(int n) {
  SpectralSymbol sym;
  sym.tag = "B(n=" + std::to_string(n) + ")";
  sym.exact = [n](int l) { return ExactScalar(frac(2 * l + n - 1, 2)); };
  sym.numeric = [n](int l) { return l + (n - 1) / 2.0; };
  return sym;
}

Rational p_odd(int n, int j, int l) {
  if (j < 0) fail(ErrorKind::Usage, "P_{2j+1} needs j >= 0");
  return pochhammer(frac(2 * l + n - 1 - 2 * j, 2), 2 * j + 1);
}

Rational p_odd_ratio(int n, int m, int k, int l) {
  if (k < 0 || k > m) fail(ErrorKind::Usage, "P ratio needs 0 <= k <= m");
  const Rational x = frac(2 * l + n - 1, 2);
  return pochhammer(Rational(x - m), k) * pochhammer(Rational(x + m - k + 1), k);
}

double sphere_volume(int n) { return specfun::sphere_area(n); }

double funk_hecke_lambda(const std::function<double(double)>& K, int l, int n,
                         const specfun::QuadratureRule& rule) {
  if (rule.domain != specfun::QuadDomain::Sphere || static_cast<int>(rule.param) != n) {
    fail(ErrorKind::Usage, "Funk-Hecke needs the sphere-weight rule for n = " + std::to_string(n));
  }
  const double alpha = (n - 1) / 2.0;
  const double integral = rule.integrate([&](double t) { return K(t) * specfun::gegenbauer(alpha, l, t); });
  if (!std::isfinite(integral)) fail(ErrorKind::Accuracy, "Funk-Hecke quadrature produced a non-finite value");
  const long double pre = std::pow(4.0L * std::numbers::pi_v<long double>, (n - 1) / 2.0L) *
                          std::exp(std::lgamma(l + 1.0L) + std::lgamma((n - 1) / 2.0L) - std::lgamma(l + n - 1.0L));
  return static_cast<double>(pre * integral);
}

double funk_hecke_lambda(const std::function<double(double)>& K, int l, int n, int order) {
  return funk_hecke_lambda(K, l, n, specfun::quad_rule(specfun::QuadDomain::Sphere, n, order));
}

// ---------------------------------------------------------------------------

double zonal_harmonic_norm_sq(int n, int l) {
  return specfun::sphere_area(n - 1) * specfun::gegenbauer_norm_sq((n - 1) / 2.0, l);
}

double ZonalFunction::operator()(double t) const {
  const double alpha = (n - 1) / 2.0;
  // Clenshaw would be faster; the direct sum keeps the order of operations
  // obvious and L is small.
  std::vector<double> terms(coeffs.size());
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    terms[l] = coeffs[l] * specfun::gegenbauer(alpha, static_cast<int>(l), t);
  }
  return specfun::pairwise_sum(terms);
}

double ZonalFunction::mode_norm_sq(int l) const {
  if (l < 0 || l > truncation()) return 0.0;
  const double f = coeffs[static_cast<std::size_t>(l)];
  return f * f * zonal_harmonic_norm_sq(n, l);
}

ZonalFunction zonal_from_coeffs(int n, std::vector<double> coeffs) {
  ZonalFunction z;
  z.n = n;
  z.coeffs = std::move(coeffs);
  return z;
}

ZonalFunction zonal_expand(const std::function<double(double)>& g, int n, const ZonalOptions& opts) {
  if (n < 2) fail(ErrorKind::Domain, "zonal expansion needs n >= 2");
  if (opts.truncation < 0) fail(ErrorKind::Usage, "negative truncation degree");
  const auto rule = specfun::quad_rule(specfun::QuadDomain::Sphere, n, opts.quad_order);
  const double alpha = (n - 1) / 2.0;
  std::vector<double> gv(rule.nodes.size());
  for (std::size_t i = 0; i < gv.size(); ++i) gv[i] = g(rule.nodes[i]);

  ZonalFunction z;
  z.n = n;
  z.coeffs.resize(static_cast<std::size_t>(opts.truncation) + 1);
  std::vector<double> terms(rule.nodes.size());
  for (int l = 0; l <= opts.truncation; ++l) {
    for (std::size_t i = 0; i < gv.size(); ++i) {
      terms[i] = rule.weights[i] * gv[i] * specfun::gegenbauer(alpha, l, rule.nodes[i]);
    }
    z.coeffs[static_cast<std::size_t>(l)] = specfun::pairwise_sum(terms) / specfun::gegenbauer_norm_sq(alpha, l);
  }

  double peak = 0.0;
  for (double c : z.coeffs) peak = std::max(peak, std::fabs(c));
  z.tail_ratio = peak > 0 ? std::fabs(z.coeffs.back()) / peak : 0.0;
  if (z.tail_ratio >= opts.decay_threshold) {
    std::ostringstream os;
    os << "coefficient tail |f_L|/max|f_l| = " << z.tail_ratio << " exceeds " << opts.decay_threshold;
    z.warnings.push_back(os.str());
  }
  for (double t : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
    z.reconstruction_error = std::max(z.reconstruction_error, std::fabs(z(t) - g(t)));
  }
  if (z.reconstruction_error > opts.reconstruction_bound) {
    std::ostringstream os;
    os << "pointwise reconstruction error " << z.reconstruction_error << " exceeds " << opts.reconstruction_bound;
    z.warnings.push_back(os.str());
  }
  return z;
}

}  // namespace sharptrace::sphere
