#pragma once

// Spectral calculus on S^n: model parameters, operator symbols diagonal on
// spherical harmonics, the Funk-Hecke eigenvalue and zonal expansions.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sharptrace/exact.hpp"
#include "sharptrace/specfun.hpp"

namespace sharptrace::sphere {

/// Sphere dimension n, order gamma and s = n/2 + gamma.
struct ModelParams {
  int n = 0;
  double gamma = 0.0;
  /// Set whenever 2*gamma is an integer; enables the exact paths.
  std::optional<HalfInt> gamma_exact;

  /// gamma = m + 1/2.
  static ModelParams half_odd(int n, int m);
  static ModelParams from_twice_gamma(int n, int twice_gamma);
  /// Snaps to the exact representation when 2*gamma is an integer.
  static ModelParams numeric(int n, double gamma);

  bool is_half_odd() const { return gamma_exact && !gamma_exact->is_integer(); }
  /// floor(gamma); the polyharmonic order index when gamma = m + 1/2.
  int m() const;
  double s() const { return n / 2.0 + gamma; }
  /// gamma = n/2 with n odd.
  bool is_critical() const;

  /// Domain error unless n >= 2 and 0 < gamma <= n/2 (strictly below n/2
  /// when allow_critical is false).
  void validate(bool allow_critical) const;
  std::string describe() const;
};

/// Eigenvalue map l -> value for an operator diagonal on spherical harmonics.
struct SpectralSymbol {
  std::string tag;
  std::function<ExactScalar(int)> exact;  // empty when only the numeric path exists
  std::function<double(int)> numeric;

  bool has_exact() const { return static_cast<bool>(exact); }
  double operator()(int l) const { return numeric(l); }
};

/// P_{2gamma}: l -> Gamma(l + n/2 + gamma) / Gamma(l + n/2 - gamma).
///
/// Exact when 2*gamma is an integer: the ratio is then the Pochhammer product
/// (l + n/2 - gamma)_{2 gamma}, which is 0 at the critical l = 0, gamma = n/2
/// (the constants are in the kernel). The numeric path rejects a pole of the
/// denominator Gamma with a Domain error.
SpectralSymbol gjms_symbol(const ModelParams& params);

/// B: l -> l + (n-1)/2.
SpectralSymbol b_symbol(int n);

/// P_{2j+1}(l) on S^n, exactly.
Rational p_odd(int n, int j, int l);

/// P_{2m+1}(l) / P_{2m+1-2k}(l) as the cancelled product
/// (x-m)_k (x+m-k+1)_k with x = l + (n-1)/2; finite at the critical l = 0.
Rational p_odd_ratio(int n, int m, int k, int l);

/// |S^n| = 2 pi^{(n+1)/2} / Gamma((n+1)/2).
double sphere_volume(int n);

/// Funk-Hecke eigenvalue of the zonal kernel K(<xi, eta>) on degree-l
/// harmonics of S^n, by Gauss-Gegenbauer quadrature.
double funk_hecke_lambda(const std::function<double(double)>& K, int l, int n,
                         const specfun::QuadratureRule& rule);
double funk_hecke_lambda(const std::function<double(double)>& K, int l, int n, int order = 200);

/// f(t) = sum_l f_l C^{(n-1)/2}_l(t), raw Gegenbauer coefficients.
struct ZonalFunction {
  int n = 0;
  std::vector<double> coeffs;  // l = 0..L
  double reconstruction_error = 0.0;
  double tail_ratio = 0.0;  // |f_L| / max |f_l|
  std::vector<std::string> warnings;

  int truncation() const { return static_cast<int>(coeffs.size()) - 1; }
  double operator()(double t) const;
  /// Squared L^2(S^n) norm of the degree-l component f_l C_l(<., e>).
  double mode_norm_sq(int l) const;
};

struct ZonalOptions {
  int truncation = 40;
  int quad_order = 200;
  double decay_threshold = 1e-10;
  double reconstruction_bound = 1e-8;
};

/// Gegenbauer coefficients of g by quadrature. Poor decay or a large
/// pointwise resummation error lands in `warnings`, not an exception.
ZonalFunction zonal_expand(const std::function<double(double)>& g, int n, const ZonalOptions& opts = {});
ZonalFunction zonal_from_coeffs(int n, std::vector<double> coeffs);

/// int_{-1}^{1} C_l^2 (1-t^2)^{(n-2)/2} dt times |S^{n-1}|: the L^2(S^n)
/// norm squared of the zonal harmonic C^{(n-1)/2}_l(<., e>).
double zonal_harmonic_norm_sq(int n, int l);

}  // namespace sharptrace::sphere
