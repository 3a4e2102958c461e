#include "sharptrace/halfspace.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "sharptrace/errors.hpp"
#include "sharptrace/specfun.hpp"

namespace sharptrace::halfspace {

namespace {

using Key = std::pair<int, int>;  // (a, j)

Rational pow2(int k) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? frac(1, v) : Rational(v);
}

Rational sign(int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

KernelExpr to_expr(const std::map<Key, Poly>& acc) {
  KernelExpr out;
  for (const auto& [key, c] : acc) {
    if (!c.is_zero()) out.push_back({c, key.first, key.second});
  }
  return out;
}

void accumulate(std::map<Key, Poly>& acc, const KernelExpr& e, const Rational& scale, int shift_a) {
  for (const auto& t : e) acc[{t.a + shift_a, t.j}] += scale * t.coeff;
}

void require_m(int m) {
  if (m < 0) fail(ErrorKind::Usage, "order m must be nonnegative");
}

// int_0^inf P(s)^2 e^{-2s} ds = sum_a q_a a! / 2^{a+1}.
Rational exp_moment_of_square(const Poly& p) {
  const Poly q = p * p;
  Rational total = 0;
  const auto c = q.coeffs();
  for (std::size_t a = 0; a < c.size(); ++a) {
    const int ai = static_cast<int>(a);
    total += c[a] * Rational(factorial(ai)) / pow2(ai + 1);
  }
  return total;
}

}  // namespace

std::string KernelTerm::to_string() const {
  std::ostringstream os;
  os << "(" << coeff.to_string("n") << ") y^" << a << " / Q^((n+1)/2+" << j << ")";
  return os.str();
}

KernelExpr kernel_derivative(const KernelExpr& e) {
  // d/dy (y^a Q^{-b}) = a y^{a-1} Q^{-b} - 2b y^{a+1} Q^{-b-1}, 2b = n + 1 + 2j.
  std::map<Key, Poly> acc;
  for (const auto& t : e) {
    if (t.a > 0) acc[{t.a - 1, t.j}] += Rational(t.a) * t.coeff;
    const Poly two_b(std::vector<Rational>{Rational(1 + 2 * t.j), Rational(1)});
    acc[{t.a + 1, t.j + 1}] -= two_b * t.coeff;
  }
  return to_expr(acc);
}

KernelExpr kernel_operator_image(int m) {
  require_m(m);
  KernelExpr d = {{Poly::constant(1), 1, 0}};
  std::map<Key, Poly> acc;
  for (int k = 0; k <= m; ++k) {
    const Rational coef = pow2(k) * frac(factorial(2 * m - k), factorial(k) * factorial(m - k));
    accumulate(acc, d, sign(k) * coef, k);
    d = kernel_derivative(d);
  }
  return to_expr(acc);
}

KernelExpr kernel_identity_check(int m) {
  KernelExpr image = kernel_operator_image(m);
  // 2^{2m} ((n+1)/2)_m as a polynomial in n.
  Poly target = Poly::constant(pow2(2 * m));
  for (int i = 0; i < m; ++i) {
    target *= Poly(std::vector<Rational>{frac(1 + 2 * i, 2), frac(1, 2)});
  }
  std::map<Key, Poly> acc;
  accumulate(acc, image, Rational(1), 0);
  acc[{1 + 2 * m, m}] -= target;
  return to_expr(acc);
}

std::vector<std::pair<std::pair<int, int>, Rational>> kernel_identity_check(int m, int n) {
  std::vector<std::pair<std::pair<int, int>, Rational>> out;
  for (const auto& t : kernel_identity_check(m)) {
    const Rational v = t.coeff(Rational(n));
    if (v != 0) out.push_back({{t.a, t.j}, v});
  }
  return out;
}

// ---------------------------------------------------------------------------

FreqProfile freq_dy(const FreqProfile& f) { return {f.p.derivative() - f.p, f.kappa_power + 1}; }

FreqProfile freq_laplacian(const FreqProfile& f) {
  const Poly d1 = f.p.derivative();
  return {d1.derivative() - Rational(2) * d1, f.kappa_power + 2};
}

FreqProfile freq_profile(int m, int k) {
  require_m(m);
  if (k < 0 || k > m + 1) fail(ErrorKind::Usage, "freq_profile needs 0 <= k <= m+1");
  if (k == m + 1) return {Poly(), 2 * k};
  const int r = m - k;
  // (-1)^k 4^{k-m} Gamma(m+1) Gamma(1/2) / (Gamma(m-k+1) Gamma(m+1/2)), the
  // sqrt(pi) cancelled into the trace constant.
  const Rational lead = sign(k) * pow2(-2 * r) * ball::trace_constant(m) / Rational(factorial(r));
  std::vector<Rational> c(static_cast<std::size_t>(r) + 1);
  for (int j = 0; j <= r; ++j) {
    c[static_cast<std::size_t>(j)] = lead * pow2(j) * frac(factorial(2 * r - j), factorial(j) * factorial(r - j));
  }
  return {Poly(std::move(c)), 2 * k};
}

bool freq_profile_iteration_check(int m) {
  FreqProfile f = freq_profile(m, 0);
  for (int k = 1; k <= m + 1; ++k) {
    f = freq_laplacian(f);
    if (!(f == freq_profile(m, k))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

bool HalfspaceTraces::exact_agreement() const {
  for (const auto* group : {&values, &normals, &pure_even, &pure_odd}) {
    for (const auto& t : *group) {
      if (t.residual() != 0) return false;
    }
  }
  return true;
}

int HalfspaceTraces::printed_mismatches() const {
  int count = 0;
  for (const auto* group : {&values, &normals, &pure_even, &pure_odd}) {
    for (const auto& t : *group) count += t.printed_matches() ? 0 : 1;
  }
  return count;
}

HalfspaceTraces halfspace_boundary_traces(int m) {
  require_m(m);
  HalfspaceTraces out;
  out.m = m;
  const Rational c = ball::trace_constant(m);
  const auto half = [](int twice) { return HalfInt::from_twice(twice); };

  for (int k = 0; k <= m; ++k) {
    const FreqProfile p = freq_profile(m, k);
    const Rational g = gamma_ratio(half(2 * (m - k) + 1), half(2 * m + 1)).as_rational();

    const Rational value = sign(k) * frac(factorial(m), factorial(m - k)) * g;
    HalfspaceTrace v{"laplacian_power", k, 2 * k, p.at_zero(), value, {}, false};
    // The printed denominator Gamma(m-k-1) in place of Gamma(m-k+1).
    if (m - k - 1 <= 0) {
      v.printed_undefined = true;
    } else {
      v.printed = sign(k) * frac(factorial(m), factorial(m - k - 2)) * g;
    }
    out.values.push_back(v);

    const FreqProfile dp = freq_dy(p);
    HalfspaceTrace d{"normal_laplacian_power", k, 2 * k + 1, dp.at_zero(), Rational(0), {}, false};
    if (k == m) {
      d.closed_form = sign(m + 1) * c;
      d.printed = sign(m) * c;
    }
    out.normals.push_back(d);
  }

  FreqProfile f = freq_profile(m, 0);
  for (int j = 0; j <= 2 * m; ++j) {
    if (j % 2 == 0) {
      const int k = j / 2;
      const Rational closed = sign(k) * (gamma_ratio(half(2 * k + 1), half(1)) *
                                         gamma_ratio(half(2 * (m - k) + 1), half(2 * m + 1)))
                                            .as_rational();
      out.pure_even.push_back({"pure_even", k, j, f.at_zero(), closed, {}, false});
    } else {
      out.pure_odd.push_back({"pure_odd", j / 2, j, f.at_zero(), Rational(0), {}, false});
    }
    f = freq_dy(f);
  }
  return out;
}

EnergyMultiplier energy_multiplier(int m) {
  require_m(m);
  EnergyMultiplier out;
  out.expected = ball::trace_constant(m);
  struct Piece {
    Rational value;
    int power;
  };
  std::vector<Piece> pieces;
  // int_0^inf (P(kappa y) e^{-kappa y} kappa^p)^2 dy = kappa^{2p-1} int P^2 e^{-2s} ds
  auto piece = [](const FreqProfile& w, int extra_power) {
    return Piece{exp_moment_of_square(w.p), 2 * w.kappa_power + extra_power - 1};
  };
  if (m % 2 == 1) {
    pieces.push_back(piece(freq_profile(m, (m + 1) / 2), 0));
  } else {
    const FreqProfile w = freq_profile(m, m / 2);
    pieces.push_back(piece(freq_dy(w), 0));
    pieces.push_back(piece(w, 2));  // |nabla_x|^2 contributes kappa^2
  }
  out.homogeneous = true;
  out.exponent = pieces.front().power;
  out.c = 0;
  for (const auto& p : pieces) {
    if (p.power != out.exponent) out.homogeneous = false;
    out.c += p.value;
  }
  if (out.exponent != 2 * m + 1) out.homogeneous = false;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct GaussianSides {
  double lhs = 0.0;
  double rhs = 0.0;
  double sharp_constant = 0.0;
  double lhs_quadrature = 0.0;
  double rhs_quadrature = 0.0;
};

// int_0^inf t^e e^{-t} dt by Gauss-Laguerre with the fractional part of e
// in the weight, so the remaining factor is a polynomial.
double laguerre_moment(double e) {
  const double whole = std::floor(e);
  const auto rule = specfun::quad_rule(specfun::QuadDomain::SemiInfinite, e - whole, 64);
  return rule.integrate([whole](double t) { return std::pow(t, whole); });
}

GaussianSides gaussian_sides(int n, int m, double sigma) {
  const double c = to_double(ball::trace_constant(m));
  const double gamma = m + 0.5;
  const double p = 2.0 * n / (n - 2.0 * m - 1.0);
  const double omega_nm1 = specfun::sphere_area(n - 1);
  GaussianSides s;

  // With f^(xi) = (2 pi sigma^2)^{n/2} e^{-sigma^2 |xi|^2 / 2} and
  // Plancherel's (2 pi)^{-n}, the energy is
  // c |S^{n-1}| sigma^{2n} int_0^inf kappa^{2m+n} e^{-sigma^2 kappa^2} dkappa.
  s.rhs = c * omega_nm1 * std::tgamma(gamma + n / 2.0) * std::pow(sigma, n - 2.0 * gamma) / 2.0;
  const double e_rhs = (2.0 * m + n - 1.0) / 2.0;
  s.rhs_quadrature = c * omega_nm1 * std::pow(sigma, 2.0 * n) * laguerre_moment(e_rhs) /
                     (2.0 * std::pow(sigma, 2.0 * m + n + 1.0));

  s.sharp_constant = c * std::exp(std::lgamma((n + 2.0 * m + 1.0) / 2.0) - std::lgamma((n - 2.0 * m - 1.0) / 2.0)) *
                     std::pow(specfun::sphere_area(n), (2.0 * m + 1.0) / n);
  const double lp_closed = std::pow(2.0 * std::numbers::pi * sigma * sigma / p, n / 2.0);
  s.lhs = s.sharp_constant * std::pow(lp_closed, 2.0 / p);
  const double lp_quad =
      omega_nm1 * 0.5 * std::pow(2.0 * sigma * sigma / p, n / 2.0) * laguerre_moment((n - 2.0) / 2.0);
  s.lhs_quadrature = s.sharp_constant * std::pow(lp_quad, 2.0 / p);
  return s;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

ball::InequalityReport halfspace_trace_report(int n, int m, double sigma) {
  if (m < 0 || 2 * m + 1 >= n) {
    fail(ErrorKind::Usage, "half-space inequality needs 0 <= m and 2m+1 < n, got n=" + std::to_string(n) +
                               ", m=" + std::to_string(m));
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) fail(ErrorKind::Usage, "Gaussian width sigma must be positive");

  const GaussianSides s = gaussian_sides(n, m, sigma);
  ball::InequalityReport rep;
  rep.inequality = "halfspace-trace";
  rep.params = "n=" + std::to_string(n) + ", m=" + std::to_string(m);
  rep.datum = "gaussian(sigma=" + fmt(sigma) + ")";
  rep.quad = {64, 0};
  rep.lhs = s.lhs;
  rep.rhs = s.rhs;
  rep.sharp_constant = s.sharp_constant;
  rep.ratio = s.rhs / s.lhs;
  rep.breakdown = {{"interior_energy", s.rhs}};

  double spread = 0.0;
  for (double scale : {0.5, 2.0, 3.0}) {
    const GaussianSides t = gaussian_sides(n, m, sigma * scale);
    spread = std::max(spread, std::fabs((t.rhs / t.lhs) / rep.ratio - 1.0));
  }
  const double quad_dev =
      std::max(std::fabs(s.lhs_quadrature / s.lhs - 1.0), std::fabs(s.rhs_quadrature / s.rhs - 1.0));
  rep.extras = {{"lhs_quadrature", s.lhs_quadrature},
                {"rhs_quadrature", s.rhs_quadrature},
                {"quadrature_relative_deviation", quad_dev},
                {"dilation_spread", spread}};
  rep.warnings.push_back("Gaussian data are not extremal; strict inequality is expected");
  return rep;
}

}  // namespace sharptrace::halfspace
