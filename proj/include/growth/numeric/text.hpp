#ifndef GROWTH_NUMERIC_TEXT_HPP
#define GROWTH_NUMERIC_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "growth/numeric/algebraic.hpp"

namespace growth::numeric {

/// Parses a number in the ambient field: `p/q`, `1.5`, `poly(c0,c1,...)`, or an
/// expression in the generator such as `1/13a^8+1/6` (variable `a`).
AlgebraicNumber parse_number(std::string_view text, const FieldPtr& field);

/// Parses the body of a field header: `-2,0,1 ; interval 1 2`, `x^2-2 ; interval 1 2`,
/// or `Q` for the rationals (returns null).
FieldPtr parse_field(std::string_view text);

/// Inverse of parse_field.
std::string field_header(const FieldPtr& field);

/// Splits on runs of whitespace.
std::vector<std::string> split_ws(std::string_view line);

/// Removes a trailing `#` comment and surrounding whitespace.
std::string strip_comment(std::string_view line);

}  // namespace growth::numeric

#endif  // GROWTH_NUMERIC_TEXT_HPP
