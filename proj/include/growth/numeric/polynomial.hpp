#ifndef GROWTH_NUMERIC_POLYNOMIAL_HPP
#define GROWTH_NUMERIC_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "growth/numeric/rational.hpp"

namespace growth::numeric {

/// Dense univariate polynomial over Q, coefficients stored low-to-high.
/// The representation is trimmed: the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coefficient of x^i, zero past the degree.
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn(eval(x)); }

  Polynomial derivative() const;
  Polynomial monic() const;
  /// p(x^s).
  Polynomial compose_power(std::size_t s) const;
  /// Divides out the largest power of x.
  Polynomial strip_zero_roots() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws DivisionByZero when `d` is zero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& n, const Polynomial& d);
  friend Polynomial operator%(const Polynomial& n, const Polynomial& d) { return divmod(n, d).second; }
  friend Polynomial operator/(const Polynomial& n, const Polynomial& d) { return divmod(n, d).first; }

  /// Human-readable form in `var`, highest degree first, e.g. `x^3 - x - 1`.
  std::string to_string(const std::string& var = "x") const;
  /// Comma-separated coefficients, low-to-high.
  std::string to_coeff_list() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Returns (g, s, t) with s*a + t*b = g and g the monic gcd.
struct Bezout {
  Polynomial g, s, t;
};
Bezout extended_gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'), made monic.
Polynomial square_free_part(const Polynomial& p);

/// Sturm chain p, p', -rem(p, p'), ... (p need not be square-free).
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);
  /// Number of sign variations at x (zeros skipped).
  int variations(const Rational& x) const;
  /// Distinct real roots in the half-open interval (lo, hi].
  int count_roots(const Rational& lo, const Rational& hi) const;
  /// Distinct real roots in (-bound, bound] for the Cauchy bound.
  int count_all_roots() const;

 private:
  std::vector<Polynomial> chain_;
};

/// 1 + max |a_i / a_n|; every root has absolute value strictly below it.
Rational cauchy_bound(const Polynomial& p);

/// Parses polynomial text in the variable `var`: `x^3 - x - 1`, `2*x^2+1/3x`, or a
/// comma-separated low-to-high coefficient list such as `-1,-1,0,1`.
Polynomial parse_polynomial(const std::string& text, char var = 'x');

}  // namespace growth::numeric

#endif  // GROWTH_NUMERIC_POLYNOMIAL_HPP
