#include "sharptrace/exact.hpp"

#include <cmath>
#include <sstream>

#include "sharptrace/errors.hpp"

namespace sharptrace {

Rational frac(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorKind::Structural, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

// ---------------------------------------------------------------------------
// ExactScalar

ExactScalar::ExactScalar(Rational q, int sqrt_pi_exponent) : q_(std::move(q)), e_(sqrt_pi_exponent) {
  q_.canonicalize();
  if (e_ < -1 || e_ > 1) {
    fail(ErrorKind::Structural, "sqrt(pi) exponent " + std::to_string(e_) + " outside {-1, 0, 1}");
  }
  if (q_ == 0) e_ = 0;
}

const Rational& ExactScalar::as_rational() const {
  if (e_ != 0) fail(ErrorKind::Structural, "value " + to_string() + " is not rational");
  return q_;
}

double ExactScalar::to_double() const {
  static const double sqrt_pi = std::sqrt(std::acos(-1.0));
  double v = q_.get_d();
  if (e_ == 1) v *= sqrt_pi;
  if (e_ == -1) v /= sqrt_pi;
  return v;
}

std::string ExactScalar::to_string() const {
  std::string s = q_.get_str();
  if (e_ == 1) s += "*sqrt(pi)";
  if (e_ == -1) s += "/sqrt(pi)";
  return s;
}

ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.e_ != b.e_) {
    fail(ErrorKind::Structural, "cannot add " + a.to_string() + " and " + b.to_string());
  }
  return ExactScalar(Rational(a.q_ + b.q_), a.e_);
}

ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) { return a + (-b); }

ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_zero() || b.is_zero()) return ExactScalar();
  return ExactScalar(Rational(a.q_ * b.q_), a.e_ + b.e_);
}

ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
  if (b.is_zero()) fail(ErrorKind::Domain, "division by zero");
  if (a.is_zero()) return ExactScalar();
  return ExactScalar(Rational(a.q_ / b.q_), a.e_ - b.e_);
}

// ---------------------------------------------------------------------------
// Gamma and friends

Integer factorial(int k) {
  if (k < 0) fail(ErrorKind::Domain, "factorial of negative integer");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

ExactScalar gamma_half(HalfInt x) {
  if (!x.is_positive()) {
    fail(ErrorKind::Domain, "Gamma at nonpositive argument " + x.to_string());
  }
  if (x.is_integer()) return ExactScalar(Rational(factorial(static_cast<int>(x.twice() / 2) - 1)));
  // Gamma(k + 1/2) = (2k)! / (4^k k!) sqrt(pi)
  const int k = static_cast<int>((x.twice() - 1) / 2);
  Integer four_k;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
  return ExactScalar(frac(factorial(2 * k), four_k * factorial(k)), 1);
}

Rational pochhammer(const Rational& a, int k) {
  if (k < 0) fail(ErrorKind::Usage, "pochhammer with negative length");
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= a + i;
  return r;
}

ExactScalar gamma_ratio(HalfInt x, HalfInt y) {
  if (!x.is_positive() || !y.is_positive()) {
    fail(ErrorKind::Domain, "Gamma ratio at nonpositive argument " + x.to_string() + ", " + y.to_string());
  }
  const HalfInt d = x - y;
  if (!d.is_integer()) return gamma_half(x) / gamma_half(y);
  const int k = static_cast<int>(d.twice() / 2);
  if (k >= 0) return ExactScalar(pochhammer(y.to_rational(), k));
  return ExactScalar(Rational(1) / pochhammer(x.to_rational(), -k));
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(int degree, const Rational& c) {
  if (degree < 0) fail(ErrorKind::Structural, "monomial with negative degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return Poly(std::move(v));
}

Rational Poly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<std::size_t>(k)];
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return Poly(std::move(d));
}

Poly Poly::compose(const Poly& inner) const {
  Poly r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + constant(*it);
  return r;
}

Poly Poly::shifted(int k) const {
  if (is_zero()) return {};
  if (k < 0) {
    for (int i = 0; i < -k; ++i) {
      if (coeff(i) != 0) fail(ErrorKind::Structural, "negative power produced by shift");
    }
    return Poly(std::vector<Rational>(c_.begin() + (-k), c_.end()));
  }
  std::vector<Rational> v(static_cast<std::size_t>(k), Rational(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(std::move(v));
}

Rational Poly::operator()(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

double Poly::eval(double x) const {
  double r = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->get_d();
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const Rational mag = abs(c_[k]);
    if (first) {
      if (c_[k] < 0) os << "-";
    } else {
      os << (c_[k] < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && k > 0;
    if (!unit) os << mag.get_str();
    if (k == 0) continue;
    if (!unit) os << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Rational& s, const Poly& p) {
  if (s == 0) return {};
  Poly r = p;
  for (auto& c : r.c_) c *= s;
  return r;
}

Poly pow(const Poly& p, int k) {
  if (k < 0) fail(ErrorKind::Usage, "negative polynomial power");
  Poly r = Poly::constant(1);
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

// ---------------------------------------------------------------------------
// RadialPoly

Poly RadialPoly::in_r() const {
  std::vector<Rational> v;
  const auto c = even.coeffs();
  if (c.empty()) return {};
  v.assign(static_cast<std::size_t>(l) + 2 * c.size(), Rational(0));
  for (std::size_t j = 0; j < c.size(); ++j) v[static_cast<std::size_t>(l) + 2 * j] = c[j];
  return Poly(std::move(v));
}

Rational RadialPoly::operator()(const Rational& r) const {
  Rational rl = 1;
  for (int i = 0; i < l; ++i) rl *= r;
  return rl * even(Rational(r * r));
}

double RadialPoly::eval(double r) const { return std::pow(r, l) * even.eval(r * r); }

// ---------------------------------------------------------------------------

namespace {

// Some k >= 0 with a = -k, if any.
bool nonpositive_integer(const Rational& a, long& k) {
  if (a.get_den() != 1 || a > 0) return false;
  k = -a.get_num().get_si();
  return true;
}

}  // namespace

Poly hyp2f1_terminating(const Rational& a, const Rational& b, const Rational& c) {
  long ka = 0, kb = 0, kc = 0;
  const bool ta = nonpositive_integer(a, ka);
  const bool tb = nonpositive_integer(b, kb);
  if (!ta && !tb) {
    fail(ErrorKind::Usage, "2F1(" + a.get_str() + ", " + b.get_str() + "; " + c.get_str() +
                               ") does not terminate");
  }
  const long K = ta && tb ? std::min(ka, kb) : (ta ? ka : kb);
  if (nonpositive_integer(c, kc) && K > kc) {
    fail(ErrorKind::Domain, "2F1 lower parameter " + c.get_str() + " vanishes before termination");
  }
  std::vector<Rational> v(static_cast<std::size_t>(K) + 1);
  Rational term = 1;
  for (long k = 0; k <= K; ++k) {
    v[static_cast<std::size_t>(k)] = term;
    if (k == K) break;
    term *=(a + k) * (b + k) / ((c + k) * (k + 1));
  }
  return Poly(std::move(v));
}

ExactScalar radial_integrate(const Poly& p, int weight_exponent) {
  if (weight_exponent < 0) fail(ErrorKind::Usage, "negative weight exponent");
  Rational s = 0;
  const auto c = p.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    s += c[j] / Rational(static_cast<long>(j) + weight_exponent + 1);
  }
  return ExactScalar(s);
}

}  // namespace sharptrace
