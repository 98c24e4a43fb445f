#ifndef GROWTH_NUMERIC_RATIONAL_HPP
#define GROWTH_NUMERIC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace growth::numeric {

// gmp keeps mpq_class canonical after every arithmetic operation
// (lowest terms, positive denominator, zero as 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

/// p/q in lowest terms (mpq_class(p, q) alone does not canonicalize).
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Parses `p`, `-p`, `p/q`, or a finite decimal such as `1.5e-3`.
Rational parse_rational(std::string_view text);

/// `p/q` or `p`.
std::string to_string(const Rational& r);

/// Fixed-point rendering with `digits` digits after the point, truncated toward -inf.
std::string to_decimal(const Rational& r, int digits);

Rational pow(const Rational& base, unsigned long exponent);

/// 10^-digits.
Rational decimal_unit(int digits);

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace growth::numeric

#endif  // GROWTH_NUMERIC_RATIONAL_HPP
