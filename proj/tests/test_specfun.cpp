#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sharptrace/errors.hpp"
#include "sharptrace/specfun.hpp"

using namespace sharptrace;
using namespace sharptrace::specfun;

TEST_SUITE("specfun") {
  TEST_CASE("hypergeometric special values") {
    CHECK(hyp2f1(0.3, 1.7, 2.2, 0.0) == 1.0);
    CHECK(hyp2f1(1, 1, 3, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(hyp2f1(1, 1, 3.5, 1.0 - 1e-9) == doctest::Approx(hyp2f1(1, 1, 3.5, 1.0)).epsilon(1e-6));
    // F(1, 1; 2; z) = -log(1 - z) / z on both sides of the switch point
    for (double z : {0.2, 0.5, 0.51, 0.9}) {
      CHECK(hyp2f1_series(1, 1, 2, z) == doctest::Approx(-std::log1p(-z) / z).epsilon(1e-14));
    }
    // Euler's transformation, both sides by independent series
    CHECK(hyp2f1(0.3, 0.7, 1.9, 0.5) ==
          doctest::Approx(std::pow(0.5, 0.9) * hyp2f1(1.6, 1.2, 1.9, 0.5)).epsilon(1e-12));
    // F(a, b; b; z) = (1 - z)^{-a}, here through the connection formula
    CHECK(hyp2f1(0.35, 1.25, 1.25, 0.8) == doctest::Approx(std::pow(0.2, -0.35)).epsilon(1e-13));
  }

  TEST_CASE("hypergeometric regimes that are refused") {
    try {
      (void)hyp2f1(1, 1, 2, 0.7);
      FAIL("expected an unsupported-regime error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnsupportedRegime);
    }
    CHECK_THROWS_AS(hyp2f1(1, 1, 1.5, 1.0), Error);
    CHECK_THROWS_AS(hyp2f1(1, 1, -2.0, 0.2), Error);
    CHECK_THROWS_AS(hyp2f1(1, 1, 3, 1.5), Error);
  }

  TEST_CASE("Gegenbauer low degrees") {
    for (double a : {0.5, 1.0, 2.5}) {
      for (double t : {-0.7, 0.0, 0.4}) {
        CHECK(gegenbauer(a, 0, t) == 1.0);
        CHECK(gegenbauer(a, 1, t) == doctest::Approx(2 * a * t));
        CHECK(gegenbauer(a, 2, t) == doctest::Approx(2 * a * (a + 1) * t * t - a));
      }
    }
    // alpha = 1/2 gives Legendre: P_3(t) = (5t^3 - 3t)/2
    CHECK(gegenbauer(0.5, 3, 0.3) == doctest::Approx((5 * 0.027 - 0.9) / 2));
    CHECK(gegenbauer(1.5, 7, 1.0) == doctest::Approx(std::tgamma(10.0) / (std::tgamma(8.0) * std::tgamma(3.0))));
  }

  TEST_CASE("quadrature rules") {
    for (int q : {1, 2, 7, 40}) {
      CHECK(quad_rule(QuadDomain::Sphere, 3, q).total_mass() ==
            doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
    }
    const auto unit = quad_rule(QuadDomain::UnitInterval, 0, 10);
    CHECK(std::fabs(unit.integrate([](double r) { return std::pow(r, 19); }) - 0.05) < 1e-15);
    for (std::size_t i = 1; i < unit.nodes.size(); ++i) CHECK(unit.nodes[i - 1] < unit.nodes[i]);

    const auto lag = quad_rule(QuadDomain::SemiInfinite, 0.5, 30);
    CHECK(lag.integrate([](double y) { return y * y; }) == doctest::Approx(std::tgamma(3.5)).epsilon(1e-13));
    CHECK_THROWS_AS(quad_rule(QuadDomain::Jacobi, -1.5, 10), Error);
  }

  TEST_CASE("sphere areas") {
    CHECK(sphere_area(0) == 2.0);
    CHECK(sphere_area(1) == doctest::Approx(2 * std::numbers::pi));
    CHECK(sphere_area(2) == doctest::Approx(4 * std::numbers::pi));
  }

  TEST_CASE("pairwise sum is order-fixed") {
    std::vector<double> v(1001);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = 1.0 / static_cast<double>(i + 1);
    const double a = pairwise_sum(v);
    CHECK(a == pairwise_sum(v));
    CHECK(a == doctest::Approx(7.486469861549344).epsilon(1e-14));
  }
}
