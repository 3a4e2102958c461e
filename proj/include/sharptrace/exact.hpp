#pragma once

// Exact arithmetic substrate: big rationals, the sqrt(pi) field extension,
// half-integer Gamma values, Pochhammer symbols and univariate polynomials
// over Q.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sharptrace {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. mpq_class(num, den) alone skips the reduction
/// that comparisons and GMP arithmetic rely on.
Rational frac(const Integer& num, const Integer& den);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

/// A number of the form twice_value / 2.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(std::int64_t v) { return HalfInt(2 * v); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_positive() const { return twice_ > 0; }
  double to_double() const { return static_cast<double>(twice_) / 2.0; }
  Rational to_rational() const { return frac(Integer(static_cast<long>(twice_)), Integer(2)); }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt operator+(std::int64_t k) const { return HalfInt(twice_ + 2 * k); }
  constexpr HalfInt operator-(std::int64_t k) const { return HalfInt(twice_ - 2 * k); }
  constexpr auto operator<=>(const HalfInt&) const = default;

  std::string to_string() const;

 private:
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

/// q * sqrt(pi)^e with e in {-1, 0, 1}.
///
/// Sums require equal exponents (zero is compatible with everything). A
/// product or quotient whose exponent would leave {-1, 0, 1} is rejected
/// with a Structural error: no quantity on the exact path involves pi to an
/// integer power, so such a product means the caller paired the wrong
/// Gamma factors.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(Rational q, int sqrt_pi_exponent = 0);  // NOLINT: implicit from Rational
  ExactScalar(long v) : ExactScalar(Rational(v)) {}   // NOLINT
  ExactScalar(int v) : ExactScalar(Rational(v)) {}    // NOLINT

  static ExactScalar sqrt_pi() { return ExactScalar(Rational(1), 1); }

  const Rational& rational() const { return q_; }
  int sqrt_pi_exponent() const { return e_; }
  bool is_zero() const { return q_ == 0; }
  bool is_rational() const { return e_ == 0; }
  /// The rational value; Structural error when a sqrt(pi) factor remains.
  const Rational& as_rational() const;

  double to_double() const;
  std::string to_string() const;

  ExactScalar operator-() const { return ExactScalar(-q_, e_); }
  friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b);
  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b);
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
  ExactScalar& operator/=(const ExactScalar& o) { return *this = *this / o; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.q_ == b.q_ && a.e_ == b.e_;
  }

 private:
  Rational q_ = 0;
  int e_ = 0;
};

/// Gamma(x) for a positive half-integer x.
ExactScalar gamma_half(HalfInt x);

/// Gamma(x) / Gamma(y) for positive half-integers; rational whenever x - y is
/// an integer.
ExactScalar gamma_ratio(HalfInt x, HalfInt y);

/// Rising factorial a (a+1) ... (a+k-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, int k);

Integer factorial(int k);

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly monomial(int degree, const Rational& c = 1);
  /// The polynomial x.
  static Poly variable() { return monomial(1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::span<const Rational> coeffs() const { return c_; }
  Rational coeff(int k) const;

  Poly derivative() const;
  Poly compose(const Poly& inner) const;
  /// Multiply by x^k.
  Poly shifted(int k) const;

  Rational operator()(const Rational& x) const;
  double eval(double x) const;

  std::string to_string(const std::string& var = "x") const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

Poly pow(const Poly& p, int k);

/// r^l * sum_j c_j r^{2j}: the radial factor of a degree-l harmonic mode.
struct RadialPoly {
  int l = 0;
  Poly even;  // polynomial in u = r^2

  /// The same function as a polynomial in r.
  Poly in_r() const;
  Rational operator()(const Rational& r) const;
  double eval(double r) const;
  bool is_zero() const { return even.is_zero(); }
  friend bool operator==(const RadialPoly& a, const RadialPoly& b) {
    return a.is_zero() ? b.is_zero() : (a.l == b.l && a.even == b.even);
  }
};

/// Terminating 2F1(a, b; c; z) as an exact polynomial in z.
///
/// Usage error when neither a nor b is a nonpositive integer; Domain error
/// when (c)_k vanishes before the series terminates.
Poly hyp2f1_terminating(const Rational& a, const Rational& b, const Rational& c);

/// Exact int_0^1 p(r) r^w dr.
ExactScalar radial_integrate(const Poly& p, int weight_exponent);

}  // namespace sharptrace
