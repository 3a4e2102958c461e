#include "sharptrace/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "sharptrace/errors.hpp"

namespace sharptrace::specfun {

namespace {

using ld = long double;

constexpr ld kSeriesEps = 1e-21L;
constexpr int kMaxTerms = 200000;

bool is_nonpositive_integer(ld x) { return x <= 0 && x == std::floor(x); }

// 1/Gamma(x), which is entire: zero at the poles.
ld rgamma(ld x) {
  if (is_nonpositive_integer(x)) return 0.0L;
  return 1.0L / std::tgamma(x);
}

// Number of terms after which the series stops on its own, or -1.
long termination_index(ld a, ld b) {
  long k = -1;
  if (is_nonpositive_integer(a)) k = static_cast<long>(-a);
  if (is_nonpositive_integer(b)) {
    const long kb = static_cast<long>(-b);
    k = k < 0 ? kb : std::min(k, kb);
  }
  return k;
}

void check_lower_parameter(ld a, ld b, ld c) {
  if (!is_nonpositive_integer(c)) return;
  const long K = termination_index(a, b);
  if (K < 0 || K > static_cast<long>(-c)) {
    fail(ErrorKind::Domain, "2F1 lower parameter c = " + std::to_string(static_cast<double>(c)) +
                                " is a pole");
  }
}

ld series(ld a, ld b, ld c, ld z, int max_terms) {
  const long K = termination_index(a, b);
  ld term = 1.0L;
  ld sum = 1.0L;
  int small = 0;
  for (long k = 0; k < max_terms; ++k) {
    if (K >= 0 && k >= K) return sum;
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
    sum += term;
    if (std::fabs(term) <= kSeriesEps * std::fabs(sum)) {
      if (++small >= 2) return sum;
    } else {
      small = 0;
    }
  }
  if (K >= 0 && K < max_terms) return sum;
  fail(ErrorKind::Convergence, "2F1 series did not converge within " + std::to_string(max_terms) +
                                   " terms");
}

ld hyp2f1_ld(ld a, ld b, ld c, ld z) {
  if (!(z >= 0.0L && z <= 1.0L)) {
    fail(ErrorKind::Domain, "2F1 argument outside [0, 1]: " + std::to_string(static_cast<double>(z)));
  }
  check_lower_parameter(a, b, c);
  if (z == 0.0L) return 1.0L;
  if (termination_index(a, b) >= 0) return series(a, b, c, z, kMaxTerms);
  if (z <= 0.5L) return series(a, b, c, z, kMaxTerms);

  const ld d = c - a - b;
  if (z == 1.0L) {
    if (d <= 0) fail(ErrorKind::Domain, "2F1 at z = 1 diverges when c - a - b <= 0");
    return std::tgamma(c) * std::tgamma(d) * rgamma(c - a) * rgamma(c - b);
  }
  if (std::fabs(d - std::nearbyint(d)) < 1e-12L) {
    fail(ErrorKind::UnsupportedRegime,
         "2F1 with integer c - a - b above z = 1/2 is the logarithmic case");
  }
  const ld w = 1.0L - z;
  const ld t1 = std::tgamma(c) * std::tgamma(d) * rgamma(c - a) * rgamma(c - b);
  const ld t2 = std::tgamma(c) * std::tgamma(-d) * rgamma(a) * rgamma(b);
  ld v = 0.0L;
  if (t1 != 0.0L) v += t1 * series(a, b, 1.0L - d, w, kMaxTerms);
  if (t2 != 0.0L) v += t2 * std::pow(w, d) * series(c - a, c - b, d + 1.0L, w, kMaxTerms);
  return v;
}

}  // namespace

double hyp2f1(double a, double b, double c, double z) {
  return static_cast<double>(hyp2f1_ld(a, b, c, z));
}

double hyp2f1_series(double a, double b, double c, double z, int max_terms) {
  check_lower_parameter(a, b, c);
  if (termination_index(a, b) < 0 && !(std::fabs(z) < 1.0)) {
    fail(ErrorKind::Domain, "2F1 power series needs |z| < 1");
  }
  return static_cast<double>(series(a, b, c, z, max_terms));
}

double hyp2f1_derivative(double a, double b, double c, double z, int k) {
  if (k < 0) fail(ErrorKind::Usage, "negative derivative order");
  ld pre = 1.0L;
  for (int i = 0; i < k; ++i) pre *= static_cast<ld>(a + i) * (b + i) / (c + i);
  if (pre == 0.0L) return 0.0;
  return static_cast<double>(pre * hyp2f1_ld(static_cast<ld>(a) + k, static_cast<ld>(b) + k,
                                             static_cast<ld>(c) + k, z));
}

double gegenbauer(double alpha, int k, double t) {
  if (k < 0) fail(ErrorKind::Usage, "negative Gegenbauer degree");
  if (k == 0) return 1.0;
  const ld x = t;
  ld prev = 1.0L;
  ld cur = 2.0L * alpha * x;
  for (int j = 2; j <= k; ++j) {
    const ld next = (2.0L * x * (j + alpha - 1) * cur - (j + 2.0L * alpha - 2) * prev) / j;
    prev = cur;
    cur = next;
  }
  return static_cast<double>(cur);
}

double gegenbauer_norm_sq(double alpha, int k) {
  const ld lg = std::log(std::numbers::pi_v<ld>) + (1.0L - 2.0L * alpha) * std::log(2.0L) +
                std::lgamma(static_cast<ld>(k) + 2.0L * alpha) - std::lgamma(static_cast<ld>(k) + 1.0L) -
                std::log(static_cast<ld>(k) + alpha) - 2.0L * std::lgamma(static_cast<ld>(alpha));
  return static_cast<double>(std::exp(lg));
}

double sphere_area(int d) {
  if (d < 0) fail(ErrorKind::Domain, "sphere dimension must be nonnegative");
  const ld h = (d + 1) / 2.0L;
  return static_cast<double>(2.0L * std::pow(std::numbers::pi_v<ld>, h) / std::tgamma(h));
}

std::string to_string(QuadDomain d) {
  switch (d) {
    case QuadDomain::Sphere: return "sphere";
    case QuadDomain::Jacobi: return "jacobi";
    case QuadDomain::UnitInterval: return "unit-interval";
    case QuadDomain::SemiInfinite: return "semi-infinite";
  }
  return "unknown";
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
  std::vector<double> terms(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) terms[i] = weights[i] * f(nodes[i]);
  return pairwise_sum(terms);
}

double QuadratureRule::total_mass() const { return pairwise_sum(weights); }

namespace {

// Eigenvalues of the symmetric tridiagonal Jacobi matrix, ascending. Only
// used as starting points for Newton, so double precision is plenty.
std::vector<ld> golub_welsch_guess(const std::vector<double>& diag, const std::vector<double>& off) {
  Eigen::VectorXd d = Eigen::Map<const Eigen::VectorXd>(diag.data(), static_cast<Eigen::Index>(diag.size()));
  Eigen::VectorXd e = Eigen::Map<const Eigen::VectorXd>(off.data(), static_cast<Eigen::Index>(off.size()));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) fail(ErrorKind::Convergence, "tridiagonal eigensolver failed");
  std::vector<ld> out(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) out[i] = solver.eigenvalues()[static_cast<Eigen::Index>(i)];
  return out;
}

// Gauss rule for (1-t^2)^lam on [-1, 1]: Newton on the Jacobi recurrence with
// alpha = beta = lam, started from the Golub-Welsch eigenvalues.
QuadratureRule gauss_jacobi_symmetric(ld lam, int Q) {
  QuadratureRule rule;
  rule.order = Q;
  rule.nodes.resize(static_cast<std::size_t>(Q));
  rule.weights.resize(static_cast<std::size_t>(Q));
  const ld ab = 2.0L * lam;
  const ld log_w = std::lgamma(lam + Q) + std::lgamma(lam + Q) - std::lgamma(Q + 1.0L) -
                   std::lgamma(Q + ab + 1.0L) + ab * std::log(2.0L);
  std::vector<double> diag(static_cast<std::size_t>(Q), 0.0), off(static_cast<std::size_t>(Q > 1 ? Q - 1 : 0));
  for (int j = 1; j < Q; ++j) {
    const ld s = 2.0L * j + 2.0L * lam;
    // j = 1 written out so that lam = -1/2 does not hit 0/0.
    const ld b2 = j == 1 ? 1.0L / (2.0L * lam + 3.0L) : j * (j + 2.0L * lam) / ((s + 1.0L) * (s - 1.0L));
    off[static_cast<std::size_t>(j - 1)] = static_cast<double>(std::sqrt(b2));
  }
  // Descending, matching the order the weights are written in below.
  std::vector<ld> guess = golub_welsch_guess(diag, off);
  std::reverse(guess.begin(), guess.end());
  std::vector<ld> x(static_cast<std::size_t>(Q));
  for (int i = 0; i < Q; ++i) {
    ld z = guess[static_cast<std::size_t>(i)];
    ld p1 = 0, p2 = 0, pp = 0, temp = 0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      temp = 2.0L + ab;
      p1 = temp * z / 2.0L;
      p2 = 1.0L;
      for (int j = 2; j <= Q; ++j) {
        const ld p3 = p2;
        p2 = p1;
        temp = 2.0L * j + ab;
        const ld a = 2.0L * j * (j + ab) * (temp - 2.0L);
        const ld b = (temp - 1.0L) * temp * (temp - 2.0L) * z;
        const ld c = 2.0L * (j - 1 + lam) * (j - 1 + lam) * temp;
        p1 = (b * p2 - c * p3) / a;
      }
      pp = (Q * (-temp * z) * p1 + 2.0L * (Q + lam) * (Q + lam) * p2) / (temp * (1.0L - z * z));
      const ld z1 = z;
      z = z1 - p1 / pp;
      const ld step = std::fabs(z - z1);
      if (step <= 1e-18L) {
        converged = true;
        break;
      }
      converged = step <= 1e-15L;
    }
    if (!converged) fail(ErrorKind::Convergence, "Gauss-Jacobi node iteration did not converge");
    x[static_cast<std::size_t>(i)] = z;
    rule.weights[static_cast<std::size_t>(Q - 1 - i)] =
        static_cast<double>(std::exp(log_w) * temp / (pp * p2));
  }
  for (int i = 0; i < Q; ++i) rule.nodes[static_cast<std::size_t>(Q - 1 - i)] = static_cast<double>(x[static_cast<std::size_t>(i)]);
  return rule;
}

// Generalized Gauss-Laguerre for y^alpha e^{-y}.
QuadratureRule gauss_laguerre(ld alpha, int Q) {
  QuadratureRule rule;
  rule.order = Q;
  rule.nodes.resize(static_cast<std::size_t>(Q));
  rule.weights.resize(static_cast<std::size_t>(Q));
  std::vector<double> diag(static_cast<std::size_t>(Q)), off(static_cast<std::size_t>(Q > 1 ? Q - 1 : 0));
  for (int j = 0; j < Q; ++j) diag[static_cast<std::size_t>(j)] = static_cast<double>(2.0L * j + alpha + 1.0L);
  for (int j = 1; j < Q; ++j) off[static_cast<std::size_t>(j - 1)] = static_cast<double>(std::sqrt(j * (j + alpha)));
  const std::vector<ld> guess = golub_welsch_guess(diag, off);
  for (int i = 0; i < Q; ++i) {
    ld z = guess[static_cast<std::size_t>(i)];
    ld p1 = 0, p2 = 0, pp = 0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      p1 = 1.0L;
      p2 = 0.0L;
      for (int j = 0; j < Q; ++j) {
        const ld p3 = p2;
        p2 = p1;
        p1 = ((2.0L * j + 1.0L + alpha - z) * p2 - (j + alpha) * p3) / (j + 1.0L);
      }
      pp = (Q * p1 - (Q + alpha) * p2) / z;
      const ld z1 = z;
      z = z1 - p1 / pp;
      const ld step = std::fabs(z - z1) / std::max(1.0L, std::fabs(z));
      if (step <= 1e-18L) {
        converged = true;
        break;
      }
      converged = step <= 1e-14L;
    }
    if (!converged) fail(ErrorKind::Convergence, "Gauss-Laguerre node iteration did not converge");
    rule.nodes[static_cast<std::size_t>(i)] = static_cast<double>(z);
    rule.weights[static_cast<std::size_t>(i)] =
        static_cast<double>(-std::exp(std::lgamma(alpha + Q) - std::lgamma(static_cast<ld>(Q))) / (pp * Q * p2));
  }
  return rule;
}

void validate(const QuadratureRule& rule, double expected_mass, double lo, double hi) {
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    if (!(x > lo && x < hi) || !(rule.weights[i] > 0.0) || (i > 0 && !(x > rule.nodes[i - 1]))) {
      fail(ErrorKind::Convergence, "quadrature construction produced an invalid node set (" +
                                       to_string(rule.domain) + ", order " + std::to_string(rule.order) + ")");
    }
  }
  const double mass = rule.total_mass();
  if (std::fabs(mass - expected_mass) > 1e-12 * std::fabs(expected_mass)) {
    fail(ErrorKind::Convergence, "quadrature mass check failed for " + to_string(rule.domain));
  }
}

}  // namespace

QuadratureRule quad_rule(QuadDomain domain, double param, int order) {
  if (order < 1) fail(ErrorKind::Usage, "quadrature order must be positive");
  QuadratureRule rule;
  switch (domain) {
    case QuadDomain::Sphere:
    case QuadDomain::Jacobi: {
      const ld lam = domain == QuadDomain::Sphere ? (param - 2.0L) / 2.0L : static_cast<ld>(param);
      if (!(lam > -1.0L)) fail(ErrorKind::Domain, "Jacobi exponent must exceed -1");
      rule = gauss_jacobi_symmetric(lam, order);
      rule.domain = domain;
      rule.param = param;
      const double mass = static_cast<double>(std::sqrt(std::numbers::pi_v<ld>) * std::tgamma(lam + 1.0L) /
                                              std::tgamma(lam + 1.5L));
      validate(rule, mass, -1.0, 1.0);
      break;
    }
    case QuadDomain::UnitInterval: {
      rule = gauss_jacobi_symmetric(0.0L, order);
      for (auto& x : rule.nodes) x = 0.5 * (x + 1.0);
      for (auto& w : rule.weights) w *= 0.5;
      rule.domain = domain;
      validate(rule, 1.0, 0.0, 1.0);
      break;
    }
    case QuadDomain::SemiInfinite: {
      if (!(param > -1.0)) fail(ErrorKind::Domain, "Laguerre parameter must exceed -1");
      rule = gauss_laguerre(param, order);
      rule.domain = domain;
      rule.param = param;
      validate(rule, std::tgamma(param + 1.0), 0.0, INFINITY);
      break;
    }
  }
  return rule;
}

}  // namespace sharptrace::specfun
