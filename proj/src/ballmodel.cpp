// Exact side of the ball model: canonical mode polynomials, mode-wise
// Laplacians, boundary traces, energies and boundary symbols.

#include "sharptrace/ballmodel.hpp"

#include "sharptrace/errors.hpp"

namespace sharptrace::ball {

namespace {

void require_half_odd(const ModelParams& params, const char* what) {
  if (!params.is_half_odd()) {
    fail(ErrorKind::Usage, std::string(what) + " needs gamma = m + 1/2, got " + params.describe());
  }
}

void require_degree(int l) {
  if (l < 0) fail(ErrorKind::Usage, "harmonic degree must be nonnegative");
}

// Upper parameter l + (n-1)/2 - m of the terminating series.
Rational upper_a(int n, int m, int l) { return frac(2 * l + n - 1 - 2 * m, 2); }
Rational lower_b(int n, int l) { return frac(2 * l + n + 1, 2); }

// m!/(2m)! (l + (n+1)/2)_m, which makes phi_l(1) = 1.
Rational phi_normalization(int n, int m, int l) {
  return frac(factorial(m), factorial(2 * m)) * pochhammer(lower_b(n, l), m);
}

Rational value_at_one(const ModeProfile& p) { return p.even(Rational(1)); }

Rational d_dr_at_one(const ModeProfile& p) {
  Rational s = 0;
  const auto c = p.even.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) s += c[j] * static_cast<long>(p.l + 2 * static_cast<int>(j));
  return s;
}

Rational d2_dr2_at_one(const ModeProfile& p) {
  Rational s = 0;
  const auto c = p.even.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    const long e = p.l + 2 * static_cast<long>(j);
    s += c[j] * (e * (e - 1));
  }
  return s;
}

Rational sign(int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

// Gamma(m+1) Gamma(m-k+1/2) / (Gamma(m+1/2) Gamma(m-k+1)), paired so each
// factor is rational.
Rational trace_gamma_factor(int m, int k) {
  const auto a = gamma_ratio(HalfInt::from_int(m + 1), HalfInt::from_int(m - k + 1));
  const auto b = gamma_ratio(HalfInt::from_twice(2 * (m - k) + 1), HalfInt::from_twice(2 * m + 1));
  return (a * b).as_rational();
}

}  // namespace

ModeProfile phi_profile(const ModelParams& params, int l) {
  require_half_odd(params, "phi_profile");
  require_degree(l);
  params.validate(true);
  const int n = params.n;
  const int m = params.m();
  return {l, phi_normalization(n, m, l) * hyp2f1_terminating(upper_a(n, m, l), Rational(-m), lower_b(n, l))};
}

Poly phi_rho_polynomial(const ModelParams& params, int l) {
  require_half_odd(params, "phi_rho_polynomial");
  require_degree(l);
  params.validate(true);
  const int m = params.m();
  const Rational a = upper_a(params.n, m, l);
  std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    Rational two_k = 1;
    for (int i = 0; i < k; ++i) two_k *= 2;
    c[static_cast<std::size_t>(k)] = pochhammer(a, k) * pochhammer(Rational(-m), k) /
                                     pochhammer(Rational(-2 * m), k) * two_k / Rational(factorial(k));
  }
  return Poly(std::move(c));
}

ModeProfile mode_laplacian(const ModeProfile& p, int n) {
  // r^{l+2j} Y_l  ->  2j (2l + 2j + n - 1) r^{l+2j-2} Y_l
  const auto c = p.even.coeffs();
  if (c.size() <= 1) return {p.l, Poly()};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t j = 1; j < c.size(); ++j) {
    const long jj = static_cast<long>(j);
    out[j - 1] = c[j] * (2 * jj * (2L * p.l + 2 * jj + n - 1));
  }
  return {p.l, Poly(std::move(out))};
}

ModeProfile mode_laplacian_pow(const ModeProfile& p, int n, int k) {
  ModeProfile q = p;
  for (int i = 0; i < k; ++i) q = mode_laplacian(q, n);
  return q;
}

Poly laplacian_in_r(const Poly& h, int l, int n) {
  const Poly r = Poly::variable();
  const Poly numerator = (r * r) * h.derivative().derivative() + Rational(n) * (r * h.derivative()) -
                         Rational(static_cast<long>(l) * (l + n - 1)) * h;
  return numerator.shifted(-2);
}

ModeProfile delta_k_Vm(const ModelParams& params, int l, int k) {
  require_half_odd(params, "delta_k_Vm");
  require_degree(l);
  params.validate(true);
  const int n = params.n;
  const int m = params.m();
  if (k < 0 || k > m + 1) fail(ErrorKind::Usage, "delta_k_Vm needs 0 <= k <= m+1");
  const Rational a = upper_a(n, m, l);
  Rational coef = phi_normalization(n, m, l) * pochhammer(a, k) * pochhammer(Rational(-m), k);
  for (int i = 0; i < k; ++i) coef *= 4;
  if (coef == 0) return {l, Poly()};
  return {l, coef * hyp2f1_terminating(Rational(a + k), Rational(-m + k), lower_b(n, l))};
}

// ---------------------------------------------------------------------------

bool BoundaryTraces::exact_agreement() const {
  for (const auto& v : values) {
    if (v.residual() != 0) return false;
  }
  for (const auto& v : normals) {
    if (v.residual() != 0) return false;
  }
  return !second_normal || second_normal->residual() == 0;
}

BoundaryTraces boundary_traces(const ModelParams& params, int l) {
  require_half_odd(params, "boundary_traces");
  require_degree(l);
  params.validate(false);
  const int n = params.n;
  const int m = params.m();
  const Rational c = trace_constant(m);

  BoundaryTraces out;
  out.l = l;
  ModeProfile g = phi_profile(params, l);
  for (int k = 0; k <= m; ++k) {
    const Rational common = sign(k) * trace_gamma_factor(m, k) * sphere::p_odd_ratio(n, m, k, l);
    out.values.push_back({"laplacian_power", k, value_at_one(g), common});

    Rational normal_closed;
    if (k < m) {
      normal_closed = -frac(n - 1 - 2 * m + 2 * k, 2) * common;
    } else {
      normal_closed = sign(m) * c *
                      (sphere::p_odd(n, m, l) - frac(n - 1, 2) * sphere::p_odd_ratio(n, m, m, l));
    }
    out.normals.push_back({"normal_laplacian_power", k, d_dr_at_one(g), normal_closed});
    g = mode_laplacian(g, n);
  }
  if (m >= 1) {
    const ModeProfile phi = phi_profile(params, l);
    const Rational eig = -Rational(static_cast<long>(l) * (l + n - 1));
    const Rational composite = eig / (2 * m - 1) +
                               frac(static_cast<long>(n - 1 - 2 * m) * ((m - 1) * n - m * (2 * m - 1)),
                                        2 * (2 * m - 1));
    out.second_normal = TraceValue{"second_normal", 0, d2_dr2_at_one(phi), composite};
  }
  return out;
}

// ---------------------------------------------------------------------------

Rational trace_constant(int m) {
  if (m < 0) fail(ErrorKind::Usage, "trace constant needs m >= 0");
  Integer four_m;
  mpz_ui_pow_ui(four_m.get_mpz_t(), 4, static_cast<unsigned long>(m));
  const Integer fm = factorial(m);
  return frac(four_m * fm * fm, factorial(2 * m));
}

Rational mode_energy(const ModeProfile& h, int n, int m) {
  if (m < 0) fail(ErrorKind::Usage, "energy order needs m >= 0");
  if (n < 2) fail(ErrorKind::Structural, "energy needs n >= 2 so that r^{n-2} is a polynomial weight");
  if (m % 2 == 1) {
    const Poly g = mode_laplacian_pow(h, n, (m + 1) / 2).in_r();
    return radial_integrate(g * g, n).as_rational();
  }
  const ModeProfile gm = mode_laplacian_pow(h, n, m / 2);
  const Poly g = gm.in_r();
  const Poly dg = g.derivative();
  Rational e = radial_integrate(dg * dg, n).as_rational();
  if (gm.l > 0) {
    e += Rational(static_cast<long>(gm.l) * (gm.l + n - 1)) * radial_integrate(g * g, n - 2).as_rational();
  }
  return e;
}

ExactScalar exact_energy(const std::vector<std::pair<Rational, ModeProfile>>& modes, const ModelParams& params) {
  require_half_odd(params, "exact_energy");
  Rational total = 0;
  for (const auto& [coef, profile] : modes) {
    if (coef == 0 || profile.is_zero()) continue;
    total += coef * coef * mode_energy(profile, params.n, params.m());
  }
  return ExactScalar(total);
}

sphere::SpectralSymbol derive_boundary_symbol(const ModelParams& params) {
  require_half_odd(params, "derive_boundary_symbol");
  params.validate(true);
  sphere::SpectralSymbol sym;
  sym.tag = "t_m derived (" + params.describe() + ")";
  sym.exact = [params](int l) {
    const int n = params.n;
    const int m = params.m();
    return ExactScalar(trace_constant(m) * sphere::p_odd(n, m, l) - mode_energy(phi_profile(params, l), n, m));
  };
  sym.numeric = [e = sym.exact](int l) { return e(l).to_double(); };
  return sym;
}

sphere::SpectralSymbol printed_boundary_symbol(const ModelParams& params) {
  require_half_odd(params, "printed_boundary_symbol");
  params.validate(true);
  sphere::SpectralSymbol sym;
  sym.tag = "T_m printed (" + params.describe() + ")";
  sym.exact = [params](int l) {
    const int n = params.n;
    const int m = params.m();
    const Rational c = trace_constant(m);
    Rational t = frac(n - 1, 2) * c * sphere::p_odd_ratio(n, m, m, l);
    // Gamma(m+1)^2/Gamma(m+1/2)^2 * Gamma(k+1/2) Gamma(m-k+1/2) / (Gamma(k+1) Gamma(m-k+1))
    auto mixed = [m](int k) {
      const auto a = gamma_ratio(HalfInt::from_twice(2 * k + 1), HalfInt::from_twice(2 * m + 1));
      const auto b = gamma_ratio(HalfInt::from_twice(2 * (m - k) + 1), HalfInt::from_twice(2 * m + 1));
      const auto d = gamma_ratio(HalfInt::from_int(m + 1), HalfInt::from_int(k + 1));
      const auto e = gamma_ratio(HalfInt::from_int(m + 1), HalfInt::from_int(m - k + 1));
      return (a * d).as_rational() * (b * e).as_rational();
    };
    const int top = m % 2 == 1 ? (m - 1) / 2 : m / 2 - 1;
    for (int k = 1; k <= top; ++k) {
      t += Rational(m - 2 * k) * mixed(k) * sphere::p_odd_ratio(n, m, k, l) * sphere::p_odd_ratio(n, m, m - k, l);
    }
    if (m % 2 == 0 && m >= 2) {
      const auto g1 = gamma_ratio(HalfInt::from_int(m + 1), HalfInt::from_int(m / 2 + 1));
      const auto g2 = gamma_ratio(HalfInt::from_twice(m + 1), HalfInt::from_twice(2 * m + 1));
      const Rational g = (g1 * g2).as_rational();
      const Rational ratio = sphere::p_odd_ratio(n, m, m / 2, l);
      t += frac(n - 1 - m, 2) * g * g * ratio * ratio;
    }
    return ExactScalar(t);
  };
  sym.numeric = [e = sym.exact](int l) { return e(l).to_double(); };
  return sym;
}

Rational ache_chang_symbol(int n, int l) {
  return Rational(2L * l * (l + n - 1)) + frac(static_cast<long>(n + 1) * (n - 3), 2);
}

EnergyIdentity energy_identity_check(const ModelParams& params, int l) {
  require_half_odd(params, "energy_identity_check");
  require_degree(l);
  params.validate(true);
  const int n = params.n;
  const int m = params.m();
  EnergyIdentity out;
  out.l = l;
  out.gjms_form = trace_constant(m) * sphere::p_odd(n, m, l);
  out.energy = mode_energy(phi_profile(params, l), n, m);
  out.derived = derive_boundary_symbol(params).exact(l).as_rational();
  out.printed = printed_boundary_symbol(params).exact(l).as_rational();
  out.residual_derived = out.gjms_form - out.energy - out.derived;
  out.residual_printed = out.gjms_form - out.energy - out.printed;
  return out;
}

}  // namespace sharptrace::ball
