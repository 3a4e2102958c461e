#pragma once

// The upper half-space model R^{n+1}_+. Everything here is exact: the kernel
// identity is checked in an algebra of terms y^a / (|x|^2 + y^2)^b with
// coefficients polynomial in n, and the extension is studied one Fourier
// mode at a time, where sqrt(-Delta_x) becomes the frequency kappa.

#include <optional>
#include <string>
#include <vector>

#include "sharptrace/ballmodel.hpp"
#include "sharptrace/exact.hpp"

namespace sharptrace::halfspace {

/// coeff(n) * y^a / (|x|^2 + y^2)^{(n+1)/2 + j}.
struct KernelTerm {
  Poly coeff;  // polynomial in the dimension n
  int a = 0;
  int j = 0;
  std::string to_string() const;
};

/// Sorted by (a, j), no zero coefficients, no repeated (a, j).
using KernelExpr = std::vector<KernelTerm>;

KernelExpr kernel_derivative(const KernelExpr& e);

/// sum_k (2^k/k!) (2m-k)!/(m-k)! (-y)^k d^k/dy^k applied to y / Q^{(n+1)/2}.
KernelExpr kernel_operator_image(int m);

/// Image minus 2^{2m} ((n+1)/2)_m y^{1+2m} / Q^{(n+1)/2+m}. Empty when the
/// identity holds for every n. Distinct j give linearly independent
/// functions (they are powers of y^2/Q times a common factor), so an empty
/// residual is a proof for the whole family.
KernelExpr kernel_identity_check(int m);

/// The same residual with n fixed.
std::vector<std::pair<std::pair<int, int>, Rational>> kernel_identity_check(int m, int n);

// ---------------------------------------------------------------------------

/// P(s) e^{-s} kappa^p with s = kappa y: one Fourier mode of a half-space
/// function.
struct FreqProfile {
  Poly p;  // in s
  int kappa_power = 0;

  Rational at_zero() const { return p.coeff(0); }
  bool is_zero() const { return p.is_zero(); }
  friend bool operator==(const FreqProfile& a, const FreqProfile& b) {
    return a.is_zero() ? b.is_zero() : (a.kappa_power == b.kappa_power && a.p == b.p);
  }
};

/// d/dy on a mode: (P' - P, p + 1).
FreqProfile freq_dy(const FreqProfile& f);
/// d^2/dy^2 - kappa^2 on a mode: (P'' - 2P', p + 2).
FreqProfile freq_laplacian(const FreqProfile& f);

/// Closed form of Delta^k U_m on one mode, 0 <= k <= m+1.
FreqProfile freq_profile(int m, int k);

/// True when iterating freq_laplacian on freq_profile(m, 0) reproduces the
/// closed form for every k.
bool freq_profile_iteration_check(int m);

struct HalfspaceTrace {
  std::string label;
  int k = 0;
  int kappa_power = 0;
  Rational from_profile;
  Rational closed_form;
  /// The printed multiplier when it differs from closed_form; nullopt with
  /// printed_undefined set when the printed Gamma factor sits on a pole.
  std::optional<Rational> printed;
  bool printed_undefined = false;

  Rational residual() const { return from_profile - closed_form; }
  bool printed_matches() const { return !printed_undefined && (!printed || *printed == closed_form); }
};

struct HalfspaceTraces {
  int m = 0;
  std::vector<HalfspaceTrace> values;     // Delta^k U at y = 0
  std::vector<HalfspaceTrace> normals;    // d_y Delta^k U at y = 0
  std::vector<HalfspaceTrace> pure_even;  // d_y^{2k} U at y = 0
  std::vector<HalfspaceTrace> pure_odd;   // d_y^{2k+1} U at y = 0, k <= m-1
  bool exact_agreement() const;
  int printed_mismatches() const;
};

/// Multipliers are reported against kappa^{kappa_power}, i.e. Delta_x^k f
/// appears as (-1)^k kappa^{2k}.
HalfspaceTraces halfspace_boundary_traces(int m);

struct EnergyMultiplier {
  Rational c;
  int exponent = 0;      // power of kappa; 2m+1 when the identity holds
  Rational expected;     // Gamma(m+1) Gamma(1/2) / Gamma(m+1/2)
  bool homogeneous = false;  // every piece carried the same kappa power
  bool matches() const { return homogeneous && exponent >= 0 && c == expected; }
};

/// Per-mode (m+1)-order Dirichlet energy of U_m, integrated over y > 0.
EnergyMultiplier energy_multiplier(int m);

/// Sharp trace inequality on the half-space for the Gaussian
/// f(x) = exp(-|x|^2 / (2 sigma^2)), both sides in closed form. Extras carry
/// the quadrature cross-check and the spread of the ratio over dilations.
ball::InequalityReport halfspace_trace_report(int n, int m, double sigma);

}  // namespace sharptrace::halfspace
