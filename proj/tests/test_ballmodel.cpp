#include <doctest.h>

#include <cmath>

#include "sharptrace/ballmodel.hpp"
#include "sharptrace/errors.hpp"

using namespace sharptrace;
using namespace sharptrace::ball;

namespace {
Poly poly(std::initializer_list<Rational> c) { return Poly(std::vector<Rational>(c)); }
}  // namespace

TEST_SUITE("ballmodel") {
  TEST_CASE("canonical profiles are normalized on the boundary") {
    for (int n = 3; n <= 8; ++n) {
      for (int m = 0; 2 * m + 1 <= n; ++m) {
        const auto P = ModelParams::half_odd(n, m);
        for (int l = 0; l <= 6; ++l) CHECK(phi_profile(P, l).even(Rational(1)) == 1);
      }
    }
    CHECK(phi_value(ModelParams::numeric(4, 0.8), 3, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK_THROWS_AS(phi_value(ModelParams::numeric(3, 2.3), 0, 0.5), Error);
  }

  TEST_CASE("u-derivatives at the boundary") {
    for (int n : {5, 7}) {
      for (int m = 1; 2 * m + 1 < n; ++m) {
        const auto P = ModelParams::half_odd(n, m);
        for (int l = 0; l <= 4; ++l) {
          Poly d = phi_profile(P, l).even;
          const Rational a = l + frac(n - 1, 2) - m;
          for (int k = 1; k <= m; ++k) {
            d = d.derivative();
            const Rational want = (k % 2 ? -1 : 1) * pochhammer(a, k) * pochhammer(Rational(-m), k) /
                                  pochhammer(Rational(-2 * m), k);
            CHECK(d(Rational(1)) == want);
          }
        }
      }
    }
  }

  TEST_CASE("the m = 1 extremal in n = 7 is 1 + 2 rho") {
    CHECK(phi_rho_polynomial(ModelParams::half_odd(7, 1), 0) == poly({1, 2}));
  }

  TEST_CASE("mode Laplacian") {
    for (int n : {3, 6}) {
      CHECK(mode_laplacian(RadialPoly{0, poly({1, -1})}, n) == RadialPoly{0, Poly::constant(-2 * (n + 1))});
      CHECK(mode_laplacian(RadialPoly{4, Poly::constant(1)}, n).is_zero());
    }
    const auto P = ModelParams::half_odd(6, 2);
    CHECK(delta_k_Vm(P, 3, 0) == phi_profile(P, 3));
    CHECK(delta_k_Vm(P, 3, 3).is_zero());
    CHECK_THROWS_AS(delta_k_Vm(P, 3, 4), Error);
  }

  TEST_CASE("boundary traces") {
    for (int n : {4, 7}) {
      for (int m = 0; 2 * m + 1 < n; ++m) {
        const auto t = boundary_traces(ModelParams::half_odd(n, m), 2);
        CHECK(t.exact_agreement());
        CHECK(t.values[0].closed_form == 1);
        // for m >= 1 the first normal trace is a multiple of the datum
        if (m >= 1) CHECK(t.normals[0].closed_form == frac(2 * m + 1 - n, 2));
        CHECK(t.second_normal.has_value() == (m >= 1));
      }
    }
  }

  TEST_CASE("energies") {
    const auto P = ModelParams::half_odd(5, 1);
    CHECK(exact_energy({}, P).is_zero());
    for (int l = 0; l <= 6; ++l) {
      const auto id = energy_identity_check(P, l);
      CHECK(id.residual_derived == 0);
      CHECK(derive_boundary_symbol(P).exact(l).as_rational() == ache_chang_symbol(5, l));
    }
    // the printed m = 1 boundary form is (n-1)(x^2-1) times the wrong constant
    CHECK(printed_boundary_symbol(P).exact(0).as_rational() != derive_boundary_symbol(P).exact(0).as_rational());
    // m = 0 needs no correction
    const auto Q = ModelParams::half_odd(5, 0);
    for (int l = 0; l <= 4; ++l) {
      CHECK(printed_boundary_symbol(Q).exact(l) == derive_boundary_symbol(Q).exact(l));
    }
  }

  TEST_CASE("Poisson extension of the constant datum") {
    for (const auto& [n, g] : std::vector<std::pair<int, double>>{{3, 0.7}, {4, 1.5}}) {
      const auto P = ModelParams::numeric(n, g);
      const auto one = sphere::zonal_from_coeffs(n, {1.0});
      const double kernel = poisson_extend([](double) { return 1.0; }, 0.0, 1.0, P);
      CHECK(kernel == doctest::Approx(series_extend(one, 0.0, 1.0, P)).epsilon(1e-10));
    }
    // gamma = m + 1/2: the series path equals rho^{(n-1)/2-m} psi
    const auto P = ModelParams::half_odd(6, 1);
    const AdaptedMetricFactor f(P);
    for (double r : {0.2, 0.6}) {
      const double rho = (1 - r * r) / 2;
      CHECK(series_extend(sphere::zonal_from_coeffs(6, {1.0}), r, 0.3, P) ==
            doctest::Approx(std::pow(rho, 1.5) * f.psi(rho)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(poisson_extend([](double) { return 1.0; }, 0.95, 0.0, P), Error);
  }

  TEST_CASE("adapted metric factors") {
    CHECK(*AdaptedMetricFactor(ModelParams::half_odd(4, 0)).exact_psi() == Poly::constant(1));
    CHECK(*AdaptedMetricFactor(ModelParams::half_odd(7, 1)).exact_psi() == poly({1, 2}));
    const AdaptedMetricFactor crit(ModelParams::half_odd(3, 1));
    CHECK(crit.critical());
    CHECK_THROWS_AS(crit.psi(0.2), Error);
    CHECK(crit.conformal_factor(0.2) == doctest::Approx(std::exp(0.4)));
    CHECK(dimension_continuity_limit(3, 0.2) == doctest::Approx(std::exp(0.4)).epsilon(1e-8));
    CHECK(tau_residual(5).is_zero());
    // split form and direct form agree off the half-integers
    const auto P = ModelParams::numeric(3, 0.7);
    CHECK(psi_split_form(P, 0.3) == doctest::Approx(adapted_metric_factor(P, 0.3)).epsilon(1e-12));
    CHECK_THROWS_AS(split_asymptotics(ModelParams::numeric(4, 1.0), 0, 0.1), Error);
    CHECK_THROWS_AS(split_asymptotics(P, 2, 0.0), Error);
    CHECK(split_asymptotics(P, 2, 1e-9).F_part == doctest::Approx(1.0).epsilon(1e-7));
  }

  TEST_CASE("trace inequality reports") {
    const auto P = ModelParams::half_odd(5, 1);
    const auto ext = trace_inequality_report(P, Datum::extremal(0.3));
    CHECK(ext.ratio == doctest::Approx(1.0).epsilon(1e-9));
    double sum = 0.0;
    for (const auto& [k, v] : ext.breakdown) sum += v;
    CHECK(sum == doctest::Approx(ext.rhs).epsilon(1e-12));
    const auto per = trace_inequality_report(P, Datum::perturbed(0.3, 0.05));
    CHECK(per.ratio > 1.0001);
    const auto printed = trace_inequality_report(P, Datum::extremal(0.3, ExponentChoice::Printed));
    CHECK_FALSE(printed.warnings.empty());
    CHECK_THROWS_AS(lebedev_milin_report(4, Datum::constant()), Error);
    CHECK(lebedev_milin_constant_stated(3) == doctest::Approx(3.0 / (16.0 * M_PI * M_PI)));
  }
}
