#ifndef GROWTH_NUMERIC_ALGEBRAIC_HPP
#define GROWTH_NUMERIC_ALGEBRAIC_HPP

#include <string>
#include <utility>
#include <vector>

#include "growth/numeric/number_field.hpp"
#include "growth/numeric/polynomial.hpp"
#include "growth/numeric/rational.hpp"

namespace growth::numeric {

/// Element c0 + c1*a + ... of Q(a), kept reduced modulo the field's defining polynomial.
///
/// A null field means the element is a plain rational. Rationals mix freely with any
/// field; two different fields never mix (FieldMismatch).
class AlgebraicNumber {
 public:
  AlgebraicNumber() = default;
  AlgebraicNumber(const Rational& r);  // NOLINT(google-explicit-constructor)
  AlgebraicNumber(long v) : AlgebraicNumber(Rational(v)) {}  // NOLINT
  AlgebraicNumber(int v) : AlgebraicNumber(Rational(v)) {}  // NOLINT
  /// Reduces `coeffs` (low-to-high powers of the field generator).
  AlgebraicNumber(FieldPtr field, std::vector<Rational> coeffs);
  AlgebraicNumber(FieldPtr field, const Polynomial& p);
  /// The generator a of `field`.
  static AlgebraicNumber generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  /// Reduced coefficients, trimmed; empty for zero.
  const std::vector<Rational>& coeffs() const { return c_; }
  Polynomial polynomial() const { return Polynomial(c_); }

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  /// Only meaningful when is_rational().
  Rational rational_value() const { return c_.empty() ? Rational(0) : c_[0]; }

  AlgebraicNumber operator-() const;
  friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
  AlgebraicNumber& operator+=(const AlgebraicNumber& b) { return *this = *this + b; }
  AlgebraicNumber& operator-=(const AlgebraicNumber& b) { return *this = *this - b; }
  AlgebraicNumber& operator*=(const AlgebraicNumber& b) { return *this = *this * b; }
  AlgebraicNumber& operator/=(const AlgebraicNumber& b) { return *this = *this / b; }
  AlgebraicNumber scaled(const Rational& k) const;
  AlgebraicNumber pow(unsigned long e) const;

  /// Throws DivisionByZero for zero and NotInvertible when the element shares a
  /// factor with a reducible defining polynomial without vanishing at the root.
  AlgebraicNumber inverse() const;

  /// Exact sign at the selected root.
  int sign() const;

  /// Rational bracket [lo, hi] with hi - lo <= width.
  std::pair<Rational, Rational> decimal_interval(const Rational& width) const;

  /// `p/q` for rational values, otherwise `poly(c0,c1,...)`.
  std::string to_string() const;
  /// Human form such as `2/3*a^5` or `-1/3*a^10 + 11/3*a^3`.
  std::string to_expression(const std::string& var = "a") const;

  /// Equal representatives (rationals compare equal across fields).
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);
  friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(a == b); }

 private:
  void reduce();

  FieldPtr field_;
  std::vector<Rational> c_;
};

/// Order by numeric value (exact sign of a - b).
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
inline bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) < 0; }
inline bool operator>(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) > 0; }
inline bool operator<=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) <= 0; }
inline bool operator>=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) >= 0; }

/// Cheap total order on representations, for sorting and deduplication only.
bool repr_less(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// Field shared by a and b; null when both are rational. Throws FieldMismatch.
FieldPtr common_field(const AlgebraicNumber& a, const AlgebraicNumber& b);

}  // namespace growth::numeric

#endif  // GROWTH_NUMERIC_ALGEBRAIC_HPP
