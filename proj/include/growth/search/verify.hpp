#ifndef GROWTH_SEARCH_VERIFY_HPP
#define GROWTH_SEARCH_VERIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "growth/search/certificate.hpp"

namespace growth::search {

struct VerifyResult {
  bool valid = false;
  /// max F.x over X when valid.
  AlgebraicNumber C;
  /// On failure: the vector that escapes conv<=(X), and the pair (i, j) producing it
  /// (absent when the escaping vector is V0/alpha).
  std::optional<Vector> witness;
  std::optional<std::pair<std::size_t, std::size_t>> pair;
};

struct VerifyOptions {
  unsigned threads = 1;
};

/// Checks V0/alpha in conv<=(X) and B(x, y) in conv<=(X) for every ordered pair.
/// The reported witness is always the first failing pair in row-major order.
/// Throws DimensionMismatch, FieldMismatch, NonPositiveScale.
VerifyResult verify_certificate(const bilinear::BilinearSystem& s, const AlgebraicNumber& alpha,
                                const std::vector<Vector>& X, const VerifyOptions& opt = {});

/// Runs verify_certificate against `s`, or against trim(s) when the certificate has
/// the trimmed dimension; the witness is then in trimmed coordinates.
VerifyResult verify_against(const bilinear::BilinearSystem& s, const Certificate& c,
                            const VerifyOptions& opt = {});

/// Human-readable statement of count(n) <= C * alpha^n with decimal brackets.
std::string upper_bound_report(const AlgebraicNumber& C, const AlgebraicNumber& alpha,
                               const std::vector<unsigned long>& ns, int digits = 6);

/// Decimal rendering of x to `digits` places, rounded from a fine bracket.
std::string approx(const AlgebraicNumber& x, int digits = 6);
/// `[lo, hi]` with hi - lo <= 10^-digits.
std::string bracket(const AlgebraicNumber& x, int digits = 6);

}  // namespace growth::search

#endif  // GROWTH_SEARCH_VERIFY_HPP
