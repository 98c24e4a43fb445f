#ifndef GROWTH_NUMERIC_NUMBER_FIELD_HPP
#define GROWTH_NUMERIC_NUMBER_FIELD_HPP

#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "growth/numeric/polynomial.hpp"
#include "growth/numeric/rational.hpp"

namespace growth::numeric {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q[x]/P(x) together with the real root of P selected by an isolating interval.
///
/// The defining polynomial may be reducible. It must have exactly one real root in
/// (lo, hi) and that root must be simple. Refining the interval is memoized and
/// guarded, so a field can be shared freely between threads.
class NumberField {
 public:
  /// Validates the interval with a Sturm count and the square-free condition.
  static FieldPtr make(const Polynomial& p, const Rational& lo, const Rational& hi);
  /// Skips the Sturm count; the caller has already isolated the root. Still checks
  /// that P changes sign on the interval.
  static FieldPtr make_isolated(const Polynomial& p, const Rational& lo, const Rational& hi);

  const Polynomial& polynomial() const { return poly_; }
  /// Monic associate of the defining polynomial; reduction happens modulo this.
  const Polynomial& modulus() const { return modulus_; }
  int degree() const { return modulus_.degree(); }
  const Rational& lower() const { return lo_; }
  const Rational& upper() const { return hi_; }

  /// Current isolating interval after bisecting until its width is at most `width`.
  /// Degenerates to a point when P has a rational root that bisection hits exactly.
  std::pair<Rational, Rational> isolating_interval(const Rational& width) const;
  /// Tightest interval computed so far.
  std::pair<Rational, Rational> current_interval() const;

  /// Same defining polynomial and same selected root.
  bool same_as(const NumberField& other) const;

  /// Nonzero terms of the modulus below the leading one, used for fast reduction.
  const std::vector<std::pair<std::size_t, Rational>>& tail() const { return tail_; }

  /// `-2,0,1 ; interval 1 2` (coefficients low-to-high)
  std::string header() const;

 private:
  NumberField(Polynomial p, Rational lo, Rational hi);

  Polynomial poly_;
  Polynomial modulus_;
  Rational lo_, hi_;
  int sign_at_lo_ = 0;
  std::vector<std::pair<std::size_t, Rational>> tail_;

  mutable std::mutex mutex_;
  mutable Rational cur_lo_, cur_hi_;
};

}  // namespace growth::numeric

#endif  // GROWTH_NUMERIC_NUMBER_FIELD_HPP
