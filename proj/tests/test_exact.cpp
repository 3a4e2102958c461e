#include <doctest.h>

#include "sharptrace/errors.hpp"
#include "sharptrace/exact.hpp"

using namespace sharptrace;

namespace {
HalfInt half(int twice) { return HalfInt::from_twice(twice); }
Poly poly(std::initializer_list<Rational> c) { return Poly(std::vector<Rational>(c)); }
}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("gamma at half-integers") {
    CHECK(gamma_half(half(1)) == ExactScalar::sqrt_pi());
    CHECK(gamma_half(HalfInt::from_int(4)) == ExactScalar(6));
    CHECK(gamma_half(half(5)) == ExactScalar(frac(3, 4), 1));
    CHECK_THROWS_AS(gamma_half(half(0)), Error);
    CHECK_THROWS_AS(gamma_half(half(-3)), Error);
  }

  TEST_CASE("gamma ratios") {
    CHECK(gamma_ratio(half(7), half(1)) == ExactScalar(frac(15, 8)));
    // l + n/2 + gamma over l + n/2 - gamma with n = 4, gamma = 3/2, l = 0
    CHECK(gamma_ratio(half(7), half(1)).is_rational());
    CHECK(gamma_ratio(HalfInt::from_int(3), HalfInt::from_int(3)) == ExactScalar(1));
  }

  TEST_CASE("pochhammer") {
    CHECK(pochhammer(frac(7, 3), 0) == 1);
    CHECK(pochhammer(Rational(-2), 3) == 0);
    CHECK(pochhammer(Rational(3), 2) == 12);
    CHECK(pochhammer(frac(1, 2), 3) == frac(15, 8));
  }

  TEST_CASE("frac canonicalizes") {
    CHECK(to_string(frac(140, 2)) == "70");
    CHECK(to_string(frac(-6, 4)) == "-3/2");
    CHECK_THROWS_AS(frac(1, 0), Error);
  }

  TEST_CASE("sqrt(pi) bookkeeping rejects pi to an integer power") {
    const ExactScalar s = ExactScalar::sqrt_pi();
    CHECK((s / s) == ExactScalar(1));
    CHECK_THROWS_AS(s * s, Error);
    CHECK_THROWS_AS(s + ExactScalar(1), Error);
    CHECK((s + ExactScalar(0)) == s);
  }

  TEST_CASE("terminating hypergeometric polynomials") {
    const Rational b = frac(5, 2);
    const Rational c = frac(7, 3);
    CHECK(hyp2f1_terminating(Rational(-1), b, c) == poly({1, -b / c}));
    CHECK(hyp2f1_terminating(Rational(-3), b, c)(Rational(0)) == 1);

    // n = 7: F(-1, (n-3)/2; -2; 2 rho) = 1 + 2 rho
    const Poly f = hyp2f1_terminating(Rational(-1), Rational(2), Rational(-2)).compose(poly({0, 2}));
    CHECK(f == poly({1, 2}));

    CHECK_THROWS_AS(hyp2f1_terminating(frac(1, 2), frac(1, 3), Rational(1)), Error);
    // (c)_k vanishes at k = 2 before the series ends at k = 3
    CHECK_THROWS_AS(hyp2f1_terminating(Rational(-3), Rational(1), Rational(-1)), Error);
  }

  TEST_CASE("radial integration") {
    CHECK(radial_integrate(Poly::constant(1), 3) == ExactScalar(frac(1, 4)));
    CHECK(radial_integrate(Poly::monomial(2), 3) == ExactScalar(frac(1, 6)));
    for (int n = 1; n <= 9; ++n) CHECK(radial_integrate(Poly::constant(1), n) == ExactScalar(frac(1, n + 1)));
  }

  TEST_CASE("polynomial algebra") {
    const Poly p = poly({1, -1});
    CHECK(pow(p, 3) == poly({1, -3, 3, -1}));
    CHECK(pow(p, 0) == Poly::constant(1));
    CHECK((p - p).is_zero());
    CHECK(pow(p, 2).derivative() == poly({-2, 2}));
    CHECK(poly({0, 0, 1}).to_string("u") == "u^2");
    CHECK(poly({1, -3, frac(3, 2), -1}).to_string() == "1 - 3*x + 3/2*x^2 - x^3");
    CHECK(poly({frac(-1, 2), 1}).to_string("rho") == "-1/2 + rho");
  }

  TEST_CASE("radial polynomials in r") {
    const RadialPoly h{2, poly({1, -1})};  // r^2 (1 - r^2)
    CHECK(h.in_r() == poly({0, 0, 1, 0, -1}));
    CHECK(h(frac(1, 2)) == frac(3, 16));
    CHECK(h.eval(0.5) == doctest::Approx(3.0 / 16.0));
  }
}
