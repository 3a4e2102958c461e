#pragma once

// Floating-point special functions: Gauss hypergeometric 2F1 on [0, 1],
// Gegenbauer polynomials and Gaussian quadrature rules.

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace sharptrace::specfun {

/// F(a, b; c; z) for z in [0, 1].
///
/// Direct series for z <= 1/2, the z -> 1 - z connection formula above that
/// (needs c - a - b non-integer), the Gauss sum at z = 1 (needs
/// c - a - b > 0). Terminating parameters are summed exactly in finite form
/// for any z in the range.
double hyp2f1(double a, double b, double c, double z);

/// Plain power series of F(a, b; c; z) with no regime switching, for
/// |z| < 1 or terminating parameters. Useful when c - a - b is an integer and
/// z sits above the switch point.
double hyp2f1_series(double a, double b, double c, double z, int max_terms = 200000);

/// k-th derivative in z, via d^k/dz^k F = (a)_k (b)_k / (c)_k F(a+k, b+k; c+k; z).
double hyp2f1_derivative(double a, double b, double c, double z, int k);

/// C^alpha_k(t) by the three-term recurrence.
double gegenbauer(double alpha, int k, double t);

/// int_{-1}^{1} C^alpha_k(t)^2 (1-t^2)^{alpha-1/2} dt.
double gegenbauer_norm_sq(double alpha, int k);

/// Surface area of the unit sphere S^d in R^{d+1}; S^0 has two points.
double sphere_area(int d);

enum class QuadDomain {
  Sphere,        // [-1, 1] with weight (1-t^2)^{(n-2)/2}
  Jacobi,        // [-1, 1] with weight (1-t^2)^param
  UnitInterval,  // [0, 1], weight 1
  SemiInfinite,  // [0, inf) with weight y^param e^{-y}
};

std::string to_string(QuadDomain d);

struct QuadratureRule {
  QuadDomain domain = QuadDomain::UnitInterval;
  int order = 0;
  double param = 0.0;  // sphere dimension n, Jacobi exponent, or Laguerre alpha
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;  // positive

  /// Sum of f(node) * weight, pairwise summed in a fixed order.
  double integrate(const std::function<double(double)>& f) const;
  double total_mass() const;
};

/// Gauss rule on the requested domain. For QuadDomain::Sphere the parameter
/// is the sphere dimension n; n = 2 degenerates to Gauss-Legendre.
QuadratureRule quad_rule(QuadDomain domain, double param, int order);

/// Fixed-order pairwise summation; the result depends only on the input
/// sequence.
double pairwise_sum(std::span<const double> values);

}  // namespace sharptrace::specfun
