#pragma once

// The unit-ball model: canonical extensions V_m mode by mode, their
// Laplacians and boundary traces, exact Dirichlet energies, the boundary
// symbol closing the energy identity, adapted metrics and the two sharp
// inequality evaluators.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sharptrace/exact.hpp"
#include "sharptrace/sphere.hpp"

namespace sharptrace::ball {

using sphere::ModelParams;

/// Degree-l radial factor h(r) of h(r) Y_l, stored as r^l * poly(r^2).
using ModeProfile = RadialPoly;

// ---------------------------------------------------------------------------
// Canonical modes

/// Exact phi_l(r^2) r^l for gamma = m + 1/2 (critical gamma = n/2 allowed).
ModeProfile phi_profile(const ModelParams& params, int l);

/// phi_l(1 - 2 rho) as a polynomial in rho, from the Taylor expansion at
/// r = 1.
Poly phi_rho_polynomial(const ModelParams& params, int l);

/// Numeric phi_l(u), u = r^2 in [0, 1], for any gamma in (0, n/2).
double phi_value(const ModelParams& params, int l, double u);
/// k-th u-derivative of phi_l.
double phi_derivative(const ModelParams& params, int l, double u, int k);

/// Euclidean Laplacian of h(r) Y_l in R^{n+1}, mode-wise.
ModeProfile mode_laplacian(const ModeProfile& p, int n);
ModeProfile mode_laplacian_pow(const ModeProfile& p, int n, int k);

/// h'' + (n/r) h' - l(l+n-1) h / r^2 for an arbitrary polynomial h(r).
/// Structural error when the result would carry negative powers of r.
Poly laplacian_in_r(const Poly& h, int l, int n);

/// Closed form of the degree-l mode of Delta^k V_m, 0 <= k <= m+1.
ModeProfile delta_k_Vm(const ModelParams& params, int l, int k);

// ---------------------------------------------------------------------------
// Boundary traces

struct TraceValue {
  std::string label;
  int k = 0;
  Rational from_profile;
  Rational closed_form;
  Rational residual() const { return from_profile - closed_form; }
};

struct BoundaryTraces {
  int l = 0;
  std::vector<TraceValue> values;   // Delta^k V|_{r=1}, k = 0..m
  std::vector<TraceValue> normals;  // d_r Delta^k V|_{r=1}, k = 0..m
  std::optional<TraceValue> second_normal;  // d_r^2 V|_{r=1}, m >= 1
  bool exact_agreement() const;
};

/// Both computation paths for a unit mode: differentiation of the iterated
/// profiles against the Gamma/P-symbol closed forms.
BoundaryTraces boundary_traces(const ModelParams& params, int l);

// ---------------------------------------------------------------------------
// Energies and the boundary symbol

/// Gamma(m+1) Gamma(1/2) / Gamma(m+1/2) = 4^m (m!)^2 / (2m)!.
Rational trace_constant(int m);

/// int_B |nabla^{m+1} (h Y_l)|^2 for a unit-norm Y_l, where nabla^{m+1} is
/// Delta^{(m+1)/2} for odd m and nabla Delta^{m/2} for even m.
Rational mode_energy(const ModeProfile& h, int n, int m);

/// Sum of coefficient^2 * mode_energy over (coefficient, profile) pairs;
/// cross-degree terms vanish by orthogonality of the Y_l.
ExactScalar exact_energy(const std::vector<std::pair<Rational, ModeProfile>>& modes, const ModelParams& params);

/// t_m(l) = c P_{2m+1}(l) - e_m(l), derived from the exact energy.
sphere::SpectralSymbol derive_boundary_symbol(const ModelParams& params);

/// The boundary operator T_m exactly as printed with the main trace theorem,
/// evaluated per degree.
sphere::SpectralSymbol printed_boundary_symbol(const ModelParams& params);

/// 2 l (l+n-1) + (n+1)(n-3)/2: the m = 1 boundary form from the fourth-order
/// trace inequality on the ball.
Rational ache_chang_symbol(int n, int l);

struct EnergyIdentity {
  int l = 0;
  Rational gjms_form;  // c P_{2m+1}(l)
  Rational energy;     // e_m(l)
  Rational derived;    // t_m(l)
  Rational printed;    // T_m(l) as printed
  Rational residual_derived;
  Rational residual_printed;
};

EnergyIdentity energy_identity_check(const ModelParams& params, int l);

// ---------------------------------------------------------------------------
// Extensions

struct PoissonOptions {
  int quad_order = 200;
  double max_radius = 0.9;
};

/// Kernel representation of the extension at x = r eta, <eta, e> = c, for
/// zonal data f(<xi, e>).
double poisson_extend(const std::function<double(double)>& f, double r, double c, const ModelParams& params,
                      const PoissonOptions& opts = {});

/// Spherical-harmonic series rho^{n-s} sum_l f_l C_l(c) phi_l(r^2) r^l.
double series_extend(const sphere::ZonalFunction& f, double r, double c, const ModelParams& params);

/// Funk-Hecke eigenvalue of (1 - 2rt + r^2)^{-s} computed three ways.
struct PoissonEigenvalue {
  double quadrature = 0.0;
  double series_form = 0.0;  // Gamma prefactor times F(gamma+1/2, n/2+l+gamma; l+(n+1)/2; r^2) r^l
  double phi_form = 0.0;     // Gamma prefactor times rho^{-2 gamma} phi_l(r^2) r^l
};
PoissonEigenvalue poisson_kernel_eigenvalue(const ModelParams& params, int l, double r, int quad_order = 200);

struct SplitParts {
  double F_part = 0.0;
  double H_part = 0.0;
  double combined(double rho, double gamma) const;  // F + rho^{2 gamma} H
};

/// The two hypergeometric branches of phi_l near the boundary for
/// 2 gamma not an integer. The H-branch coefficient uses
/// 1/d_gamma = Gamma(-gamma) / (2^{2 gamma} Gamma(gamma)).
SplitParts split_asymptotics(const ModelParams& params, int l, double rho);

/// 2^{2 gamma} Gamma(gamma+1/2) Gamma(-2 gamma) / (Gamma(2 gamma) Gamma(1/2 - gamma)),
/// the coefficient before the duplication formula is applied.
double split_coefficient_unreduced(double gamma);
double inverse_d_gamma(double gamma);

// ---------------------------------------------------------------------------
// Adapted metrics

/// Sigma(rho) with the critical conformal factor exp(2 Sigma), n odd:
/// Gamma((n+1)/2)/Gamma(n) sum_k Gamma(n-k) / (Gamma((n+1)/2-k) k) (2 rho)^k.
Poly critical_sigma_polynomial(int n);

class AdaptedMetricFactor {
 public:
  explicit AdaptedMetricFactor(ModelParams params);

  const ModelParams& params() const { return params_; }
  bool critical() const { return params_.is_critical(); }
  /// Exact psi in rho for gamma = m + 1/2 below n/2.
  const std::optional<Poly>& exact_psi() const { return exact_; }

  /// psi_gamma(rho). Domain error in the critical regime, where no psi exists.
  double psi(double rho) const;
  /// g* = factor * |dx|^2: psi^{4/(n-2 gamma)} or exp(2 Sigma).
  double conformal_factor(double rho) const;

 private:
  ModelParams params_;
  std::optional<Poly> exact_;
  std::optional<Poly> sigma_;
};

/// psi_gamma(rho) below the critical order, exp(2 Sigma) at gamma = n/2.
double adapted_metric_factor(const ModelParams& params, double rho);

/// psi_gamma via the split branch form, for 2 gamma not an integer.
double psi_split_form(const ModelParams& params, double rho);

/// lim_{n' -> n} psi_{m+1/2}(rho; n')^{4/(n'-2m-1)} with m = (n-1)/2, by
/// Richardson extrapolation in n'.
double dimension_continuity_limit(int n, double rho);

/// -Delta_g tau - n as a polynomial in rho, tau = Sigma + ln rho, where
/// Delta_g is the hyperbolic Laplacian on radial functions.
Poly tau_residual(int n);

// ---------------------------------------------------------------------------
// Mode eigen-equation

struct ModeEigenResidual {
  std::optional<Poly> exact;  // half-odd gamma
  double numeric_max = 0.0;   // sampled at r = 0.1, ..., 0.9
};
ModeEigenResidual verify_mode_eigen(const ModelParams& params, int l);

// ---------------------------------------------------------------------------
// Inequalities

enum class ExponentChoice { Beckner, Printed };

struct Datum {
  enum class Kind { Constant, Extremal, Perturbed, Custom };
  Kind kind = Kind::Constant;
  double x0 = 0.0;
  ExponentChoice exponent = ExponentChoice::Beckner;
  double amplitude = 0.0;  // perturbed: f = extremal + amplitude * C_mode
  int mode = 2;
  std::function<double(double)> custom;
  std::string custom_label = "custom";

  static Datum constant() { return {}; }
  static Datum extremal(double x0, ExponentChoice e = ExponentChoice::Beckner);
  static Datum perturbed(double x0, double amplitude, int mode = 2, ExponentChoice e = ExponentChoice::Beckner);
  std::string describe() const;
};

struct QuadConfig {
  int order = 200;
  int truncation = 40;
};

struct InequalityReport {
  std::string inequality;
  std::string params;
  std::string datum;
  QuadConfig quad;
  double lhs = 0.0;
  double rhs = 0.0;
  double sharp_constant = 0.0;
  double ratio = 0.0;
  std::vector<std::pair<std::string, double>> breakdown;  // sums to rhs
  std::vector<std::pair<std::string, double>> extras;
  std::vector<std::string> warnings;
};

/// Both sides of the sharp trace inequality on the ball, 2m+1 < n.
InequalityReport trace_inequality_report(const ModelParams& params, const Datum& datum, const QuadConfig& quad = {});

/// The critical exponential inequality, n odd and m = (n-1)/2. Datum
/// extremal means -ln(1 - x0 t).
InequalityReport lebedev_milin_report(int n, const Datum& datum, const QuadConfig& quad = {});

/// n / (2^{n+1} pi^{(n+1)/2} Gamma((n+1)/2)), the constant as stated.
double lebedev_milin_constant_stated(int n);
/// n / (2 (n-1)! omega_n) * Gamma(n/2) / (Gamma((n+1)/2) Gamma(1/2)), from the chain of
/// estimates.
double lebedev_milin_constant_chain(int n);

}  // namespace sharptrace::ball
