#ifndef GROWTH_SEARCH_CERTIFICATE_HPP
#define GROWTH_SEARCH_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "growth/bilinear/system.hpp"

namespace growth::search {

using bilinear::AlgebraicNumber;
using bilinear::Vector;

/// Scaling value alpha plus a vector set X; C = max F.x is derived, never trusted.
struct Certificate {
  std::string title;
  numeric::FieldPtr field;  // null for rational data
  AlgebraicNumber alpha;
  std::vector<Vector> vectors;
  std::vector<Vector> seeds;
  /// Coordinate names of the system the vectors were built for (may be empty).
  std::vector<std::string> state_names;
  /// The `C` line of the file, if any. Informative only.
  std::optional<AlgebraicNumber> stated_c;
};

/// Format: `# title`, `field: ...`, `alpha x`, optional `states ...`, `seed ...`,
/// `vec ...`, `C x`, `vectors N`. Throws ParseError with line numbers. A `vectors N`
/// line, when present, must match the number of `vec` lines (catches truncation).
Certificate parse_certificate(const std::string& text);
Certificate load_certificate(const std::string& path);

/// Writes the certificate; C is recomputed from `f` when given.
std::string format_certificate(const Certificate& c, const Vector* f = nullptr);

}  // namespace growth::search

#endif  // GROWTH_SEARCH_CERTIFICATE_HPP
