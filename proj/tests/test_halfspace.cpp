#include <doctest.h>

#include "sharptrace/errors.hpp"
#include "sharptrace/halfspace.hpp"

using namespace sharptrace;
using namespace sharptrace::halfspace;

TEST_SUITE("halfspace") {
  TEST_CASE("kernel identity") {
    CHECK(kernel_identity_check(0).empty());
    for (int m = 1; m <= 4; ++m) {
      CHECK(kernel_identity_check(m).empty());
      for (int n = 3; n <= 8; ++n) CHECK(kernel_identity_check(m, n).empty());
    }
    // y / Q^{(n+1)/2}: d/dy gives 1/Q^{..} - (n+1) y^2 / Q^{..+1}
    const KernelExpr base{{Poly::constant(1), 1, 0}};
    const auto d = kernel_derivative(base);
    REQUIRE(d.size() == 2);
    CHECK(d[0].a == 0);
    CHECK(d[1].a == 2);
    CHECK(d[1].coeff == Poly(std::vector<Rational>{Rational(-1), Rational(-1)}));
  }

  TEST_CASE("frequency profiles") {
    for (int m = 0; m <= 4; ++m) {
      CHECK(freq_profile(m, 0).at_zero() == 1);
      CHECK(freq_profile(m, m + 1).is_zero());
      CHECK(freq_profile_iteration_check(m));
    }
    CHECK_THROWS_AS(freq_profile(2, 4), Error);
    CHECK_THROWS_AS(freq_profile(2, -1), Error);
  }

  TEST_CASE("Neumann traces") {
    for (int m = 1; m <= 4; ++m) {
      const auto t = halfspace_boundary_traces(m);
      CHECK(t.exact_agreement());
      for (int k = 0; k < m; ++k) CHECK(t.normals[k].closed_form == 0);
      CHECK(t.printed_mismatches() > 0);
    }
  }

  TEST_CASE("energy multipliers") {
    CHECK(energy_multiplier(0).c == 1);
    CHECK(energy_multiplier(1).c == 2);
    CHECK(energy_multiplier(2).c == frac(8, 3));
    for (int m = 0; m <= 4; ++m) {
      const auto e = energy_multiplier(m);
      CHECK(e.matches());
      CHECK(e.exponent == 2 * m + 1);
    }
  }

  TEST_CASE("Gaussian report") {
    const auto r = halfspace_trace_report(5, 1, 1.0);
    CHECK(r.ratio >= 1.0);
    CHECK(r.ratio == doctest::Approx(halfspace_trace_report(5, 1, 3.0).ratio).epsilon(1e-12));
    CHECK_THROWS_AS(halfspace_trace_report(3, 1, 1.0), Error);
    CHECK_THROWS_AS(halfspace_trace_report(5, 1, 0.0), Error);
  }
}
