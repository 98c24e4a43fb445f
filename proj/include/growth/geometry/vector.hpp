#ifndef GROWTH_GEOMETRY_VECTOR_HPP
#define GROWTH_GEOMETRY_VECTOR_HPP

#include <string>
#include <vector>

#include "growth/numeric/algebraic.hpp"

namespace growth::geometry {

using numeric::AlgebraicNumber;
using Vector = std::vector<AlgebraicNumber>;

/// Throws DimensionMismatch unless the sizes agree.
void check_dims(const Vector& a, const Vector& b, const char* what);

AlgebraicNumber dot(const Vector& a, const Vector& b);
Vector scaled(const Vector& v, const AlgebraicNumber& k);
Vector add(const Vector& a, const Vector& b);

/// Componentwise a <= b.
bool dominated_by(const Vector& a, const Vector& b);
bool nonnegative(const Vector& v);

/// Representation order, for canonical sorting and deduplication.
bool repr_less(const Vector& a, const Vector& b);

/// Space-separated coordinates in number syntax.
std::string to_string(const Vector& v);

/// Coordinates that are not already rational are rejected unless they share `field`.
numeric::FieldPtr field_of(const Vector& v);

}  // namespace growth::geometry

#endif  // GROWTH_GEOMETRY_VECTOR_HPP
