// Registered checks for the four suites. Each task is self-contained and
// seeds its own generator, so results do not depend on scheduling.

#include <chrono>
#include <cmath>
#include <ctime>
#include <numbers>
#include <random>
#include <sstream>

#include "sharptrace/errors.hpp"
#include "sharptrace/halfspace.hpp"
#include "sharptrace/report.hpp"

namespace sharptrace::report {

namespace {

using Task = std::function<std::vector<Check>()>;
using ball::ModelParams;
using sharptrace::to_string;
using report::to_string;

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------------
// Check builders

Check exact_check(std::string name, std::string tag, const std::optional<std::string>& first_residual,
                  Json details = Json::object()) {
  Check c;
  c.name = std::move(name);
  c.paper_ref = std::move(tag);
  c.status = first_residual ? Status::Fail : Status::Pass;
  c.residual = first_residual.value_or("0");
  c.tolerance = "exact";
  c.details = std::move(details);
  return c;
}

Check numeric_check(std::string name, std::string tag, double residual, double tol, Json details = Json::object()) {
  Check c;
  c.name = std::move(name);
  c.paper_ref = std::move(tag);
  c.status = (std::isfinite(residual) && residual <= tol) ? Status::Pass : Status::Fail;
  c.residual = residual;
  c.tolerance = tol;
  c.details = std::move(details);
  return c;
}

Check flagged_check(std::string name, std::string tag, Json residual, Json details, Json tolerance = "exact") {
  Check c;
  c.name = std::move(name);
  c.paper_ref = std::move(tag);
  c.status = Status::Flagged;
  c.residual = std::move(residual);
  c.tolerance = std::move(tolerance);
  c.details = std::move(details);
  return c;
}

std::string cell(int n, int m) { return "[n=" + std::to_string(n) + ",m=" + std::to_string(m) + "]"; }

double rel_dev(double a, double b) { return std::fabs(a - b) / std::max(1.0, std::fabs(b)); }

Rational random_rational(std::mt19937& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return frac(num(rng), den(rng));
}

// ---------------------------------------------------------------------------
// specfun: exact substrate and floating-point special functions

std::vector<Task> specfun_tasks() {
  std::vector<Task> t;

  t.push_back([] {
    std::optional<std::string> bad;
    for (int tw = 1; tw <= 41 && !bad; ++tw) {
      const HalfInt x = HalfInt::from_twice(tw);
      const ExactScalar r = gamma_half(x + 1) - ExactScalar(x.to_rational()) * gamma_half(x);
      if (!r.is_zero()) bad = r.to_string();
    }
    return std::vector{exact_check("gamma.recurrence", "gamma/half-integer-recurrence", bad,
                                   {{"arguments", "x = 1/2 .. 41/2"}})};
  });

  t.push_back([] {
    std::optional<std::string> bad;
    for (int tw = 1; tw <= 21 && !bad; ++tw) {
      const HalfInt z = HalfInt::from_twice(tw);
      const HalfInt two_z = HalfInt::from_twice(2 * tw);
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(tw - 1));  // 2^{2z-1}
      const ExactScalar rhs = ExactScalar(Rational(p)) * gamma_half(z) * gamma_half(z + HalfInt::from_twice(1)) /
                              ExactScalar::sqrt_pi();
      const ExactScalar r = gamma_half(two_z) - rhs;
      if (!r.is_zero()) bad = r.to_string();
    }
    return std::vector{exact_check("gamma.duplication", "gamma/duplication", bad, {{"arguments", "z = 1/2 .. 21/2"}})};
  });

  t.push_back([] {
    std::mt19937 rng(1101);
    std::optional<std::string> bad;
    for (int trial = 0; trial < 40 && !bad; ++trial) {
      const Rational a = random_rational(rng, 30, 7);
      const int k = static_cast<int>(rng() % 7);
      const int j = static_cast<int>(rng() % 7);
      const Rational r = pochhammer(a, k) * pochhammer(Rational(a + k), j) - pochhammer(a, k + j);
      if (r != 0) bad = to_string(r);
    }
    return std::vector{exact_check("pochhammer.additivity", "pochhammer/additivity", bad, {{"trials", 40}})};
  });

  t.push_back([] {
    std::optional<std::string> bad;
    struct P {
      Rational a, b, c;
    };
    const std::vector<P> params = {{frac(3, 2), Rational(-4), frac(7, 2)},
                                   {frac(-1, 3), Rational(-5), frac(2, 5)},
                                   {Rational(-6), frac(5, 4), frac(9, 2)},
                                   {frac(11, 2), Rational(-3), frac(-7, 2)}};
    for (const auto& p : params) {
      const Poly f = hyp2f1_terminating(p.a, p.b, p.c);
      Poly d = f;
      for (int k = 1; k <= 4 && !bad; ++k) {
        d = d.derivative();
        const Rational coef = pochhammer(p.a, k) * pochhammer(p.b, k) / pochhammer(p.c, k);
        const Poly rhs = coef == 0 ? Poly() : coef * hyp2f1_terminating(p.a + k, p.b + k, p.c + k);
        if (!(d == rhs)) bad = "k=" + std::to_string(k) + ": " + (d - rhs).to_string("z");
      }
    }
    return std::vector{exact_check("hypergeometric.derivative", "hypergeometric/derivative", bad,
                                   {{"orders", "k = 1..4"}, {"parameter_sets", params.size()}})};
  });

  t.push_back([] {
    std::mt19937 rng(2202);
    const auto rule = specfun::quad_rule(specfun::QuadDomain::UnitInterval, 0, 32);
    double worst = 0.0;
    for (int trial = 0; trial < 25; ++trial) {
      const int deg = static_cast<int>(rng() % 21);
      const int w = static_cast<int>(rng() % 7);
      std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
      for (auto& x : c) x = random_rational(rng, 9, 8);
      const Poly p(c);
      const double exact = radial_integrate(p, w).to_double();
      const double quad = rule.integrate([&](double r) { return p.eval(r) * std::pow(r, w); });
      worst = std::max(worst, rel_dev(quad, exact));
    }
    return std::vector{numeric_check("radial.integrate-vs-quadrature", "radial/integration", worst, 1e-14,
                                     {{"trials", 25}, {"max_degree", 20}})};
  });

  t.push_back([] {
    double worst = 0.0;
    struct P {
      double a;
      int N;
      double c;
    };
    for (const P p : {P{1.5, 4, 3.5}, P{-0.3, 6, 0.4}, P{2.25, 3, -4.5}, P{7.0, 8, 2.5}}) {
      const Poly f = hyp2f1_terminating(Rational(p.a), Rational(-p.N), Rational(p.c));
      for (int i = 0; i <= 10; ++i) {
        const double z = 0.1 * i;
        worst = std::max(worst, rel_dev(specfun::hyp2f1(p.a, -p.N, p.c, z), f.eval(z)));
      }
    }
    return std::vector{numeric_check("hypergeometric.terminating-agreement", "hypergeometric/series", worst, 1e-12,
                                     {{"z", "0, 0.1, ..., 1"}})};
  });

  t.push_back([] {
    double worst = 0.0;
    struct P {
      double a, b, c;
    };
    for (const P p : {P{0.3, 0.7, 1.9}, P{1.2, -0.4, 2.35}, P{2.1, 1.4, 0.8}, P{0.5, 0.5, 1.25}}) {
      for (int i = 0; i <= 18; ++i) {
        const double z = 0.41 + 0.01 * i;
        worst = std::max(worst, rel_dev(specfun::hyp2f1(p.a, p.b, p.c, z), specfun::hyp2f1_series(p.a, p.b, p.c, z)));
      }
    }
    return std::vector{numeric_check("hypergeometric.connection-overlap", "hypergeometric/connection-formula", worst,
                                     1e-13, {{"z", "0.41 .. 0.59"}})};
  });

  t.push_back([] {
    double worst = 0.0;
    struct P {
      double a, b, c;
    };
    double limit = 0.0;
    for (const P p : {P{0.3, 0.7, 3.6}, P{-1.2, 0.4, 2.9}, P{1.5, 1.25, 6.0}}) {
      const double at_one = specfun::hyp2f1(p.a, p.b, p.c, 1.0);
      const double gauss =
          std::tgamma(p.c) * std::tgamma(p.c - p.a - p.b) / (std::tgamma(p.c - p.a) * std::tgamma(p.c - p.b));
      worst = std::max(worst, rel_dev(at_one, gauss));
      limit = std::max(limit, rel_dev(specfun::hyp2f1(p.a, p.b, p.c, 1.0 - 1e-6), at_one));
    }
    return std::vector{numeric_check("hypergeometric.gauss-sum", "hypergeometric/gauss-sum", worst, 1e-12,
                                     {{"note", "value at z=1 against the Gamma product"}}),
                       numeric_check("hypergeometric.unit-limit", "hypergeometric/gauss-sum", limit, 1e-5,
                                     {{"z", 1.0 - 1e-6}, {"min_c_minus_a_minus_b", 2.6}})};
  });

  t.push_back([] {
    // Rodrigues' formula with the k-th derivative of (1-t)^p (1+t)^p taken
    // by Leibniz' rule in closed form.
    std::mt19937 rng(3303);
    std::uniform_real_distribution<double> A(0.2, 4.0);
    std::uniform_real_distribution<double> T(-0.95, 0.95);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const double alpha = A(rng);
      const int k = static_cast<int>(rng() % 9);
      const double t = T(rng);
      const double p = k + alpha - 0.5;
      auto falling = [](double x, int j) {
        double v = 1.0;
        for (int i = 0; i < j; ++i) v *= x - i;
        return v;
      };
      double deriv = 0.0;
      for (int j = 0; j <= k; ++j) {
        const double binom = std::exp(std::lgamma(k + 1.0) - std::lgamma(j + 1.0) - std::lgamma(k - j + 1.0));
        const double left = (j % 2 ? -1.0 : 1.0) * falling(p, j) * std::pow(1.0 - t, p - j);
        const double right = falling(p, k - j) * std::pow(1.0 + t, p - k + j);
        deriv += binom * left * right;
      }
      const double pre = (k % 2 ? -1.0 : 1.0) / (std::pow(2.0, k) * std::tgamma(k + 1.0)) *
                         std::exp(std::lgamma(alpha + 0.5) + std::lgamma(k + 2 * alpha) - std::lgamma(2 * alpha) -
                                  std::lgamma(alpha + k + 0.5));
      const double rod = pre * std::pow(1.0 - t * t, 0.5 - alpha) * deriv;
      worst = std::max(worst, rel_dev(rod, specfun::gegenbauer(alpha, k, t)));
    }
    return std::vector{numeric_check("gegenbauer.rodrigues", "gegenbauer/rodrigues", worst, 1e-9, {{"triples", 20}})};
  });

  t.push_back([] {
    double odd = 0.0;
    double even = 0.0;
    for (double alpha : {0.5, 1.0, 1.5, 2.3}) {
      for (double mu : {0.7, 1.0, 1.5, 2.5}) {
        const auto rule = specfun::quad_rule(specfun::QuadDomain::Jacobi, mu - 1.0, 64);
        for (int k = 0; k <= 6; ++k) {
          const double i_odd = rule.integrate([&](double x) { return specfun::gegenbauer(alpha, 2 * k + 1, x); });
          odd = std::max(odd, std::fabs(i_odd));
          const double i_even = rule.integrate([&](double x) { return specfun::gegenbauer(alpha, 2 * k, x); });
          double closed = std::tgamma(mu) * std::sqrt(kPi) / std::tgamma(mu + 0.5);
          for (int i = 0; i < k; ++i) closed *= (alpha + i) * (alpha - mu + 0.5 + i) / ((mu + 0.5 + i) * (i + 1));
          even = std::max(even, rel_dev(i_even, closed));
        }
      }
    }
    return std::vector{
        numeric_check("gegenbauer.half-angle-odd", "gegenbauer/half-angle-integral", odd, 1e-11),
        numeric_check("gegenbauer.half-angle-even", "gegenbauer/half-angle-integral", even, 1e-10)};
  });

  t.push_back([] {
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 1.5, 2.0, 3.5}) {
      const auto rule = specfun::quad_rule(specfun::QuadDomain::Jacobi, alpha - 0.5, 40);
      for (int k = 0; k <= 12; ++k) {
        const double q = rule.integrate([&](double x) {
          const double c = specfun::gegenbauer(alpha, k, x);
          return c * c;
        });
        worst = std::max(worst, std::fabs(q / specfun::gegenbauer_norm_sq(alpha, k) - 1.0));
      }
    }
    return std::vector{numeric_check("gegenbauer.norm", "gegenbauer/norm", worst, 1e-12)};
  });

  t.push_back([] {
    double worst = 0.0;
    for (int n = 2; n <= 12; ++n) {
      const auto rule = specfun::quad_rule(specfun::QuadDomain::Sphere, n, 200);
      worst = std::max(worst, std::fabs(specfun::sphere_area(n - 1) * rule.total_mass() / specfun::sphere_area(n) - 1));
    }
    for (double a : {0.0, 0.5, 1.5, 3.0}) {
      const auto rule = specfun::quad_rule(specfun::QuadDomain::SemiInfinite, a, 64);
      worst = std::max(worst, std::fabs(rule.total_mass() / std::tgamma(a + 1.0) - 1.0));
    }
    const auto rule = specfun::quad_rule(specfun::QuadDomain::Sphere, 5, 200);
    auto f = [](double x) { return std::exp(std::sin(3.0 * x)) / (1.5 + x); };
    const double first = rule.integrate(f);
    const double again = specfun::quad_rule(specfun::QuadDomain::Sphere, 5, 200).integrate(f);
    return std::vector{numeric_check("quadrature.mass", "quadrature/mass", worst, 1e-13),
                       exact_check("quadrature.repeatability", "quadrature/determinism",
                                   first == again ? std::nullopt : std::optional<std::string>(format_double(first - again)),
                                   {{"note", "rule rebuilt and integral repeated"}})};
  });

  t.push_back([] {
    double worst = 0.0;
    for (int n = 2; n <= 8; ++n) {
      const auto rule = specfun::quad_rule(specfun::QuadDomain::Sphere, n, 200);
      for (int l = 1; l <= 8; ++l) {
        worst = std::max(worst, std::fabs(sphere::funk_hecke_lambda([](double) { return 1.0; }, l, n, rule)));
      }
    }
    return std::vector{numeric_check("funk-hecke.constant-kernel", "funk-hecke/constant-kernel", worst, 1e-11)};
  });

  t.push_back([] {
    std::optional<std::string> bad;
    for (int n = 2; n <= 9 && !bad; ++n) {
      for (int tw = 1; tw < n && !bad; tw += 2) {
        const auto sym = sphere::gjms_symbol(ModelParams::from_twice_gamma(n, tw));
        for (int l = 0; l < 10 && !bad; ++l) {
          const Rational lhs = sym.exact(l + 1).as_rational() * frac(2 * l + n - tw, 2);
          const Rational rhs = sym.exact(l).as_rational() * frac(2 * l + n + tw, 2);
          if (lhs != rhs) bad = to_string(lhs - rhs);
        }
      }
    }
    bool kernel = true;
    for (int n = 3; n <= 9; n += 2) {
      kernel = kernel && sphere::gjms_symbol(ModelParams::from_twice_gamma(n, n)).exact(0).is_zero();
    }
    return std::vector{exact_check("gjms.symbol-recurrence", "gjms/symbol-recurrence", bad),
                       exact_check("gjms.critical-constants", "gjms/critical-kernel",
                                   kernel ? std::nullopt : std::optional<std::string>("nonzero"),
                                   {{"note", "P_n annihilates constants for odd n"}})};
  });

  t.push_back([] {
    std::mt19937 rng(4404);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    double worst = 0.0;
    for (int n : {2, 3, 5, 8}) {
      std::vector<double> c(11);
      for (auto& x : c) x = U(rng);
      const auto truth = sphere::zonal_from_coeffs(n, c);
      const auto back = sphere::zonal_expand([&](double t) { return truth(t); }, n, {12, 200, 1.0, 1e-8});
      for (std::size_t l = 0; l < back.coeffs.size(); ++l) {
        const double want = l < c.size() ? c[l] : 0.0;
        worst = std::max(worst, std::fabs(back.coeffs[l] - want));
      }
    }
    return std::vector{numeric_check("zonal.round-trip", "zonal/expansion", worst, 1e-12,
                                     {{"degree", 10}, {"truncation", 12}})};
  });

  return t;
}

// ---------------------------------------------------------------------------
// ball: exact closure on the grid, then fixed numeric cells

std::optional<std::string> first_nonzero(const Poly& p) {
  if (p.is_zero()) return std::nullopt;
  return p.to_string();
}

std::vector<Task> ball_grid_tasks(const SuiteConfig& cfg) {
  std::vector<Task> t;
  const int lmax = cfg.l_max;
  for (const auto& [n, m] : cfg.grid()) {
    t.push_back([n, m, lmax] {
      const auto P = ModelParams::half_odd(n, m);
      std::optional<std::string> harm, closed, norm, eig, traces, energy, additivity;
      Json trace_details = Json::array();
      for (int l = 0; l <= lmax; ++l) {
        const auto h = ball::phi_profile(P, l);
        auto g = h;
        for (int k = 0; k <= m + 1; ++k) {
          if (!closed && !(g == ball::delta_k_Vm(P, l, k))) {
            closed = "l=" + std::to_string(l) + ", k=" + std::to_string(k) + ": " +
                     (g.even - ball::delta_k_Vm(P, l, k).even).to_string("u");
          }
          if (k <= m) g = ball::mode_laplacian(g, n);
        }
        if (!harm && !g.is_zero()) harm = "l=" + std::to_string(l) + ": " + g.even.to_string("u");
        if (!norm && h.even(Rational(1)) != 1) norm = to_string(Rational(h.even(Rational(1)) - 1));
        if (!eig) {
          if (auto r = first_nonzero(*ball::verify_mode_eigen(P, l).exact)) eig = "l=" + std::to_string(l) + ": " + *r;
        }
        const auto bt = ball::boundary_traces(P, l);
        if (!traces && !bt.exact_agreement()) {
          for (const auto* group : {&bt.values, &bt.normals}) {
            for (const auto& v : *group) {
              if (!traces && v.residual() != 0) traces = v.label + " k=" + std::to_string(v.k) + ": " + to_string(v.residual());
            }
          }
          if (!traces && bt.second_normal) traces = "second_normal: " + to_string(bt.second_normal->residual());
        }
        const auto id = ball::energy_identity_check(P, l);
        if (!energy && id.residual_derived != 0) energy = "l=" + std::to_string(l) + ": " + to_string(id.residual_derived);
      }
      return std::vector{
          exact_check("ball.polyharmonic" + cell(n, m), "canonical-extension/polyharmonic", harm, {{"l_max", lmax}}),
          exact_check("ball.laplacian-closed-form" + cell(n, m), "canonical-extension/laplacian-powers", closed,
                      {{"l_max", lmax}}),
          exact_check("ball.normalization" + cell(n, m), "canonical-extension/normalization", norm, {{"l_max", lmax}}),
          exact_check("ball.mode-equation" + cell(n, m), "canonical-extension/mode-equation", eig, {{"l_max", lmax}}),
          exact_check("ball.boundary-traces" + cell(n, m), "canonical-extension/boundary-traces", traces,
                      {{"l_max", lmax}, {"second_normal_composite", m >= 1}}),
          exact_check("ball.energy-identity" + cell(n, m), "energy-identity/derived-symbol", energy, {{"l_max", lmax}})};
    });

    t.push_back([n, m, lmax] {
      const auto P = ModelParams::half_odd(n, m);
      const auto derived = ball::derive_boundary_symbol(P);
      const auto printed = ball::printed_boundary_symbol(P);
      std::vector<Check> out;
      Json diffs = Json::array();
      std::optional<std::string> first;
      for (int l = 0; l <= lmax; ++l) {
        const Rational d = printed.exact(l).as_rational() - derived.exact(l).as_rational();
        if (d != 0) {
          diffs.push_back({{"l", l}, {"printed_minus_derived", to_string(d)}});
          if (!first) first = to_string(d);
        }
      }
      if (first) {
        out.push_back(flagged_check("ball.printed-boundary-operator" + cell(n, m),
                                    "energy-identity/printed-boundary-operator", *first,
                                    {{"mismatches", diffs}, {"note", "the derived symbol is used in all reports"}}));
      } else {
        out.push_back(exact_check("ball.printed-boundary-operator" + cell(n, m),
                                  "energy-identity/printed-boundary-operator", std::nullopt, {{"l_max", lmax}}));
      }
      if (m == 1) {
        std::optional<std::string> bad;
        for (int l = 0; l <= lmax && !bad; ++l) {
          const Rational r = derived.exact(l).as_rational() - ball::ache_chang_symbol(n, l);
          if (r != 0) bad = "l=" + std::to_string(l) + ": " + to_string(r);
        }
        out.push_back(exact_check("ball.fourth-order-boundary-form" + cell(n, m),
                                  "energy-identity/fourth-order-anchor", bad,
                                  {{"closed_form", "2l(l+n-1) + (n+1)(n-3)/2"}}));
      }

      // Orthogonal perturbations w = (1-r^2)^{m+1} q(r^2) r^l: the cross
      // term with the canonical mode must vanish exactly.
      std::mt19937 rng(static_cast<unsigned>(7000 + 100 * n + m));
      std::optional<std::string> bad;
      const Poly one_minus_u = Poly(std::vector<Rational>{Rational(1), Rational(-1)});
      const Poly vanishing = pow(one_minus_u, m + 1);
      for (int trial = 0; trial < 20; ++trial) {
        const int l = static_cast<int>(rng() % static_cast<unsigned>(lmax + 1));
        const int deg = static_cast<int>(rng() % 3);
        std::vector<Rational> q(static_cast<std::size_t>(deg) + 1);
        for (auto& x : q) x = random_rational(rng, 12, 9);
        const ball::ModeProfile w{l, vanishing * Poly(q)};
        const auto v = ball::phi_profile(P, l);
        const ball::ModeProfile sum{l, v.even + w.even};
        const Rational r = ball::mode_energy(sum, n, m) - ball::mode_energy(v, n, m) - ball::mode_energy(w, n, m);
        if (r != 0 && !bad) bad = "trial " + std::to_string(trial) + ": " + to_string(r);
      }
      out.push_back(exact_check("ball.orthogonal-additivity" + cell(n, m), "energy-identity/orthogonal-additivity", bad,
                                {{"perturbations", 20}, {"seed", 7000 + 100 * n + m}}));
      return out;
    });
  }
  return t;
}

std::vector<Task> ball_numeric_tasks(const SuiteConfig& cfg) {
  std::vector<Task> t;
  const int order = cfg.quad_order;
  const int trunc = cfg.truncation;

  t.push_back([] {
    double worst = 0.0;
    int rejected = 0;
    int unexpected = 0;
    for (double g : {0.3, 0.7, 1.2, 2.3}) {
      for (int n : {3, 4, 5}) {
        for (int l = 0; l <= 8; ++l) {
          if (g >= n / 2.0) {
            try {
              (void)ball::phi_value(ModelParams::numeric(n, g), l, 1.0);
              ++unexpected;
            } catch (const Error& e) {
              if (e.kind() == ErrorKind::Domain) {
                ++rejected;
              } else {
                ++unexpected;
              }
            }
            continue;
          }
          worst = std::max(worst, std::fabs(ball::phi_value(ModelParams::numeric(n, g), l, 1.0) - 1.0));
        }
      }
    }
    auto c = numeric_check("ball.normalization-numeric", "canonical-extension/normalization", worst, 1e-12,
                           {{"gamma", {0.3, 0.7, 1.2, 2.3}}, {"n", {3, 4, 5}}, {"domain_rejections", rejected}});
    if (unexpected > 0) {
      c.status = Status::Fail;
      c.details["unexpected_outcomes"] = unexpected;
    }
    return std::vector{c};
  });

  for (const auto& [n, g] : std::vector<std::pair<int, double>>{{3, 0.7}, {4, 1.5}, {5, 2.5}}) {
    t.push_back([n, g, order, trunc] {
      const auto P = ModelParams::numeric(n, g);
      const double alpha = (n - 1) / 2.0;
      const double ex = (2.0 * g - n) / 2.0;
      const std::vector<std::pair<std::string, std::function<double(double)>>> data = {
          {"constant", [](double) { return 1.0; }},
          {"C2-mode", [alpha](double x) { return specfun::gegenbauer(alpha, 2, x); }},
          {"extremal(0.3)", [ex](double x) { return std::pow(1.0 - 0.3 * x, ex); }}};
      double worst = 0.0;
      for (const auto& [label, f] : data) {
        const auto z = sphere::zonal_expand(f, n, {trunc, order});
        for (double r : {0.0, 0.225, 0.45, 0.675, 0.9}) {
          for (double c : {1.0, 0.5, 0.0, -0.5, -1.0}) {
            const double a = ball::poisson_extend(f, r, c, P, {order, 0.9});
            const double b = ball::series_extend(z, r, c, P);
            worst = std::max(worst, rel_dev(a, b));
          }
        }
      }
      std::ostringstream name;
      name << "ball.kernel-series-duality[n=" << n << ",gamma=" << format_double(g) << "]";
      return std::vector{numeric_check(name.str(), "extension/kernel-series-duality", worst, 1e-8,
                                       {{"points", 25}, {"data", {"constant", "C2-mode", "extremal(0.3)"}}})};
    });
  }

  t.push_back([order] {
    double worst = 0.0;
    for (const auto& [n, g] : std::vector<std::pair<int, double>>{{3, 0.7}, {4, 1.5}, {5, 2.5}}) {
      const auto P = ModelParams::numeric(n, g);
      for (int l = 0; l <= 8; ++l) {
        for (double r : {0.2, 0.5, 0.8}) {
          const auto e = ball::poisson_kernel_eigenvalue(P, l, r, order);
          worst = std::max({worst, std::fabs(e.quadrature / e.series_form - 1.0),
                            std::fabs(e.phi_form / e.series_form - 1.0)});
        }
      }
    }
    return std::vector{numeric_check("ball.funk-hecke-closed-form", "funk-hecke/poisson-kernel-eigenvalue", worst,
                                     1e-10, {{"l_max", 8}, {"r", {0.2, 0.5, 0.8}}})};
  });

  t.push_back([] {
    double worst = 0.0;
    double coef = 0.0;
    for (double g : {0.3, 0.7, 1.2}) {
      coef = std::max(coef, rel_dev(ball::split_coefficient_unreduced(g), ball::inverse_d_gamma(g)));
      for (int n : {3, 4, 5}) {
        const auto P = ModelParams::numeric(n, g);
        for (int l = 0; l <= 4; ++l) {
          for (double rho : {0.05, 0.15, 0.24}) {
            const auto s = ball::split_asymptotics(P, l, rho);
            worst = std::max(worst, rel_dev(s.combined(rho, g), ball::phi_value(P, l, 1.0 - 2.0 * rho)));
          }
        }
      }
    }
    return std::vector{numeric_check("ball.boundary-expansion", "extension/boundary-expansion", worst, 1e-10),
                       numeric_check("ball.boundary-expansion-coefficient", "extension/boundary-expansion", coef,
                                     1e-12, {{"note", "duplication-reduced form of the H-branch coefficient"}})};
  });

  t.push_back([] {
    double worst = 0.0;
    for (double g : {0.3, 0.7, 1.2}) {
      for (int n : {3, 4, 5}) {
        for (int l = 0; l <= 4; ++l) {
          worst = std::max(worst, ball::verify_mode_eigen(ModelParams::numeric(n, g), l).numeric_max);
        }
      }
    }
    return std::vector{numeric_check("ball.mode-equation-numeric", "canonical-extension/mode-equation", worst, 1e-9)};
  });

  t.push_back([] {
    std::optional<std::string> half, three_half, tau;
    for (int n = 2; n <= 9; ++n) {
      const Poly p = *ball::AdaptedMetricFactor(ModelParams::half_odd(n, 0)).exact_psi();
      if (!half && !(p == Poly::constant(1))) half = "n=" + std::to_string(n) + ": " + p.to_string("rho");
      if (n >= 4) {
        const Poly q = *ball::AdaptedMetricFactor(ModelParams::half_odd(n, 1)).exact_psi();
        const Poly want(std::vector<Rational>{Rational(1), frac(n - 3, 2)});
        if (!three_half && !(q == want)) three_half = "n=" + std::to_string(n) + ": " + (q - want).to_string("rho");
      }
    }
    for (int n : {3, 5, 7}) {
      if (auto r = first_nonzero(ball::tau_residual(n)); r && !tau) tau = "n=" + std::to_string(n) + ": " + *r;
    }
    double lim = 0.0;
    for (int n : {3, 5, 7}) {
      const ball::AdaptedMetricFactor crit(ModelParams::half_odd(n, (n - 1) / 2));
      for (double rho : {0.1, 0.25, 0.4, 0.5}) {
        lim = std::max(lim, std::fabs(ball::dimension_continuity_limit(n, rho) / crit.conformal_factor(rho) - 1.0));
      }
    }
    double cont = 0.0;
    for (int n : {4, 5, 7}) {
      for (int m = 0; 2 * m + 1 < n; ++m) {
        const ball::AdaptedMetricFactor exact(ModelParams::half_odd(n, m));
        for (double d : {-1e-9, 1e-9}) {
          if (m == 0 && d < 0) continue;
          const ball::AdaptedMetricFactor near(ModelParams::numeric(n, m + 0.5 + d));
          for (double rho : {0.26, 0.35, 0.45}) cont = std::max(cont, std::fabs(near.psi(rho) - exact.psi(rho)));
        }
      }
    }
    return std::vector{
        exact_check("metric.psi-one-half", "adapted-metric/closed-form", half, {{"claim", "psi_{1/2} = 1"}}),
        exact_check("metric.psi-three-halves", "adapted-metric/closed-form", three_half,
                    {{"claim", "psi_{3/2} = 1 + (n-3) rho / 2"}}),
        exact_check("metric.critical-tau", "adapted-metric/critical-tau", tau, {{"n", {3, 5, 7}}}),
        numeric_check("metric.dimension-limit", "adapted-metric/dimension-limit", lim, 1e-6,
                      {{"n", {3, 5, 7}}, {"rho", {0.1, 0.25, 0.4, 0.5}}}),
        numeric_check("metric.gamma-continuity", "adapted-metric/gamma-continuity", cont, 1e-6,
                      {{"offset", 1e-9}, {"rho", {0.26, 0.35, 0.45}}})};
  });
  return t;
}

// ---------------------------------------------------------------------------
// halfspace

std::vector<Task> halfspace_tasks() {
  std::vector<Task> t;
  t.push_back([] {
    std::vector<Check> out;
    for (int m = 0; m <= 6; ++m) {
      const auto r = halfspace::kernel_identity_check(m);
      std::optional<std::string> bad;
      if (!r.empty()) bad = r.front().to_string();
      out.push_back(exact_check("halfspace.kernel-identity[m=" + std::to_string(m) + "]",
                                "half-space/kernel-identity", bad, {{"dimension", "symbolic n"}}));
    }
    return out;
  });

  t.push_back([] {
    std::vector<Check> out;
    for (int m = 0; m <= 5; ++m) {
      const std::string tag = "[m=" + std::to_string(m) + "]";
      const bool iter = halfspace::freq_profile_iteration_check(m) && halfspace::freq_profile(m, 0).at_zero() == 1 &&
                        halfspace::freq_profile(m, m + 1).is_zero();
      out.push_back(exact_check("halfspace.mode-profiles" + tag, "half-space/mode-profiles",
                                iter ? std::nullopt : std::optional<std::string>("iteration mismatch")));

      const auto tr = halfspace::halfspace_boundary_traces(m);
      std::optional<std::string> bad;
      for (const auto* group : {&tr.values, &tr.normals, &tr.pure_even, &tr.pure_odd}) {
        for (const auto& v : *group) {
          if (!bad && v.residual() != 0) bad = v.label + " k=" + std::to_string(v.k) + ": " + to_string(v.residual());
        }
      }
      out.push_back(exact_check("halfspace.boundary-traces" + tag, "half-space/boundary-traces", bad,
                                {{"note", "profile differentiation against the corrected closed forms"}}));

      Json denom = Json::array();
      Json first_gap;
      for (const auto& v : tr.values) {
        if (v.printed_matches()) continue;
        Json gap = v.printed_undefined ? Json("undefined (Gamma pole)")
                                       : Json(to_string(Rational(*v.printed - v.closed_form)));
        if (first_gap.is_null()) first_gap = gap;
        denom.push_back({{"k", v.k},
                         {"corrected", to_string(v.closed_form)},
                         {"printed", v.printed_undefined ? Json("undefined (Gamma pole)") : Json(to_string(*v.printed))},
                         {"printed_minus_corrected", gap}});
      }
      if (!denom.empty()) {
        out.push_back(flagged_check("halfspace.printed-trace-denominator" + tag, "half-space/printed-trace-denominator",
                                    first_gap, {{"mismatches", denom}, {"reading", "Gamma(m-k-1) in the denominator"}}));
      }
      const auto& top = tr.normals.back();
      if (!top.printed_matches()) {
        out.push_back(flagged_check("halfspace.printed-normal-sign" + tag, "half-space/printed-normal-sign",
                                    to_string(Rational(*top.printed - top.closed_form)),
                                    {{"corrected", to_string(top.closed_form)}, {"printed", to_string(*top.printed)}}));
      }

      const auto e = halfspace::energy_multiplier(m);
      Json ed = {{"c_m", to_string(e.c)}, {"expected", to_string(e.expected)}, {"kappa_power", e.exponent}};
      std::optional<std::string> ebad;
      if (!e.homogeneous) ebad = "mixed kappa powers";
      else if (e.c != e.expected) ebad = to_string(Rational(e.c - e.expected));
      out.push_back(exact_check("halfspace.energy-multiplier" + tag, "half-space/energy-multiplier", ebad, ed));
    }
    return out;
  });

  for (const auto& [n, m] : std::vector<std::pair<int, int>>{{5, 1}, {7, 2}}) {
    t.push_back([n, m] {
      double worst_quad = 0.0;
      double worst_spread = 0.0;
      double min_ratio = INFINITY;
      for (double sigma : {0.5, 1.0, 2.5}) {
        const auto rep = halfspace::halfspace_trace_report(n, m, sigma);
        min_ratio = std::min(min_ratio, rep.ratio);
        for (const auto& [k, v] : rep.extras) {
          if (k == "quadrature_relative_deviation") worst_quad = std::max(worst_quad, v);
          if (k == "dilation_spread") worst_spread = std::max(worst_spread, v);
        }
      }
      Check ratio = numeric_check("halfspace.gaussian-ratio" + cell(n, m), "half-space/gaussian-trace-inequality",
                                  std::max(0.0, 1.0 - min_ratio), 0.0, {{"min_ratio", min_ratio}});
      return std::vector{
          ratio,
          numeric_check("halfspace.gaussian-dilation" + cell(n, m), "half-space/gaussian-trace-inequality",
                        worst_spread, 1e-10),
          numeric_check("halfspace.gaussian-quadrature" + cell(n, m), "half-space/gaussian-trace-inequality",
                        worst_quad, 1e-9)};
    });
  }
  return t;
}

// ---------------------------------------------------------------------------
// inequality

std::vector<Task> inequality_tasks(const SuiteConfig& cfg) {
  std::vector<Task> t;
  const ball::QuadConfig quad{cfg.quad_order, cfg.truncation};

  for (const auto& [n, m] : std::vector<std::pair<int, int>>{{5, 1}, {7, 1}, {7, 2}}) {
    t.push_back([n, m, quad] {
      const auto P = ModelParams::half_odd(n, m);
      std::vector<Check> out;
      for (double x0 : {0.0, 0.3}) {
        const auto rep = ball::trace_inequality_report(P, ball::Datum::extremal(x0), quad);
        out.push_back(numeric_check("inequality.trace-extremal" + cell(n, m) + "[x0=" + format_double(x0) + "]",
                                    "trace-inequality/extremal-equality", std::fabs(rep.ratio - 1.0), 1e-6,
                                    to_json(rep)));
      }
      for (const auto& [amp, mode] : std::vector<std::pair<double, int>>{{0.05, 2}, {0.02, 3}}) {
        const auto rep = ball::trace_inequality_report(P, ball::Datum::perturbed(0.3, amp, mode), quad);
        Check c = numeric_check("inequality.trace-perturbed" + cell(n, m) + "[mode=" + std::to_string(mode) + "]",
                                "trace-inequality/strictness", 1.0 + 1e-4 - rep.ratio, 0.0, to_json(rep));
        c.residual = rep.ratio - 1.0;
        c.tolerance = Json{{"min_excess", 1e-4}};
        out.push_back(c);
      }
      const auto printed = ball::trace_inequality_report(P, ball::Datum::extremal(0.3, ball::ExponentChoice::Printed),
                                                         quad);
      const double dev = std::fabs(printed.ratio - 1.0);
      if (dev > 1e-6) {
        out.push_back(flagged_check("inequality.printed-extremal-exponent" + cell(n, m),
                                    "trace-inequality/printed-extremal-exponent", dev, to_json(printed), 1e-6));
      } else {
        out.push_back(numeric_check("inequality.printed-extremal-exponent" + cell(n, m),
                                    "trace-inequality/printed-extremal-exponent", dev, 1e-6, to_json(printed)));
      }
      return out;
    });
  }

  t.push_back([quad] {
    std::vector<Check> out;
    const auto c = ball::lebedev_milin_report(3, ball::Datum::constant(), quad);
    Check cc = exact_check("inequality.exponential-constant[n=3]", "exponential-inequality/constant-datum",
                           (c.lhs == 0.0 && c.rhs == 0.0)
                               ? std::nullopt
                               : std::optional<std::string>(format_double(c.lhs) + " vs " + format_double(c.rhs)),
                           to_json(c));
    out.push_back(cc);
    for (int n : {3, 5}) {
      const auto e = ball::lebedev_milin_report(n, ball::Datum::extremal(0.3), quad);
      out.push_back(numeric_check("inequality.exponential-extremal[n=" + std::to_string(n) + "]",
                                  "exponential-inequality/extremal-equality", std::fabs(e.ratio - 1.0), 1e-6,
                                  to_json(e)));
    }
    for (const auto& [amp, mode] : std::vector<std::pair<double, int>>{{0.1, 2}, {0.05, 1}}) {
      const auto p = ball::lebedev_milin_report(3, ball::Datum::perturbed(0.3, amp, mode), quad);
      Check s = numeric_check("inequality.exponential-perturbed[n=3,mode=" + std::to_string(mode) + "]",
                              "exponential-inequality/strictness", p.lhs - p.rhs + 1e-8, 0.0, to_json(p));
      s.residual = p.rhs - p.lhs;
      s.tolerance = Json{{"min_gap", 1e-8}};
      out.push_back(s);
    }
    double cdev = 0.0;
    for (int n : {3, 5, 7, 9}) {
      cdev = std::max(cdev, std::fabs(ball::lebedev_milin_constant_chain(n) / ball::lebedev_milin_constant_stated(n) - 1));
    }
    out.push_back(numeric_check("inequality.exponential-constant-chain", "exponential-inequality/constant", cdev, 1e-14,
                                {{"n", {3, 5, 7, 9}}, {"n3_value", ball::lebedev_milin_constant_stated(3)},
                                 {"n3_closed_form", "3/(16 pi^2)"}}));
    const double stated = ball::lebedev_milin_constant_stated(3);
    const double printed = 3.0 / (16.0 * kPi * kPi * kPi);
    out.push_back(flagged_check("inequality.exponential-printed-constant[n=3]",
                                "exponential-inequality/printed-constant", printed - stated,
                                {{"printed", "3/(16 pi^3)"},
                                 {"recomputed", "3/(16 pi^2)"},
                                 {"printed_value", printed},
                                 {"recomputed_value", stated}}));
    return out;
  });
  return t;
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

Report run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  std::vector<Task> tasks;
  auto append = [&tasks](std::vector<Task> more) {
    for (auto& task : more) tasks.push_back(std::move(task));
  };
  const bool all = cfg.suite == "all";
  if (all || cfg.suite == "specfun") {
    if (cfg.numeric || cfg.exact) append(specfun_tasks());
  }
  if (all || cfg.suite == "ball") {
    if (cfg.exact) append(ball_grid_tasks(cfg));
    if (cfg.numeric) append(ball_numeric_tasks(cfg));
  }
  if (all || cfg.suite == "halfspace") {
    append(halfspace_tasks());
  }
  if (all || cfg.suite == "inequality") {
    if (cfg.numeric) append(inequality_tasks(cfg));
  }

  Report r;
  r.suite = cfg.suite;
  r.version = version();
  if (cfg.timestamp) r.timestamp = utc_now();
  r.config = cfg.to_json();
  r.checks = run_tasks(tasks, cfg.workers, cfg.timestamp);
  return r;
}

}  // namespace sharptrace::report
