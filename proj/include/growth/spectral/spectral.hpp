#ifndef GROWTH_SPECTRAL_SPECTRAL_HPP
#define GROWTH_SPECTRAL_SPECTRAL_HPP

#include <functional>
#include <string>
#include <utility>

#include "growth/numeric/algebraic.hpp"
#include "growth/spectral/gadget.hpp"

namespace growth::spectral {

using numeric::FieldPtr;
using numeric::Polynomial;
using numeric::Rational;

/// det(M - x I) by Berkowitz's division-free recurrence; entries must be rational.
Polynomial char_poly(const Matrix& m);

struct RootIsolation {
  FieldPtr field;  // generator = the root
  Rational lo, hi;
};

/// Largest real root of p, isolated by Sturm sequences and bisected to `width`.
/// Throws NoRealRoot.
RootIsolation largest_real_root(const Polynomial& p, const Rational& width);

/// Some power of the 0/1 pattern of M is all positive (Wielandt exponent).
bool is_primitive(const Matrix& m);

/// Rational bracket of a real number, as a function of the wanted width.
using Bracketer = std::function<std::pair<Rational, Rational>(const Rational&)>;

Bracketer bracket_of(const numeric::AlgebraicNumber& x);

/// beta = lambda^(1/size) for the largest real root lambda of a polynomial.
struct LowerBound {
  Polynomial char_poly;
  FieldPtr lambda_field;       // lambda as the generator
  unsigned long size = 1;
  bool primitive = false;      // dominance of the real root checked
  /// Outward-rounded bracket of beta.
  std::pair<Rational, Rational> beta_interval(const Rational& width) const;
  Bracketer beta() const;
  /// beta as an exact element of Q[x]/(p(x^size)); only sensible for small degree.
  numeric::AlgebraicNumber beta_exact() const;
  std::string dominance() const { return primitive ? "verified-dominance" : "unverified-dominance"; }
};

/// Requires an entrywise nonnegative transfer matrix (NegativeEntry otherwise).
LowerBound lower_bound(const bilinear::BilinearSystem& s, const Gadget& g, unsigned long gadget_size);
LowerBound lower_bound_from_matrix(const Matrix& m, unsigned long gadget_size);

/// `count` selections per block of `size` vertices: beta = count^(1/size), a 1x1
/// transfer matrix.
LowerBound lower_bound_from_count(const Rational& count, unsigned long size);

/// Sign of x - y by refining both brackets until they separate; 0 if they still
/// overlap at width 2^-max_bits (possibly equal).
int compare_separated(const Bracketer& x, const Bracketer& y, long max_bits = 400);

/// Decimal string of a bracket rounded to `digits`, or "" when the two ends round
/// differently.
std::string rounded(const std::pair<Rational, Rational>& b, int digits);

}  // namespace growth::spectral

#endif  // GROWTH_SPECTRAL_SPECTRAL_HPP
