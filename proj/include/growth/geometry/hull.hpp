#ifndef GROWTH_GEOMETRY_HULL_HPP
#define GROWTH_GEOMETRY_HULL_HPP

#include <vector>

#include "growth/geometry/vector.hpp"

namespace growth::geometry {

/// Is x in conv<=(X), i.e. dominated by some convex combination of X?
/// X must be nonempty and nonnegative; throws DimensionMismatch.
bool member_dominated_hull(const Vector& x, const std::vector<Vector>& X);

/// Same, with X given as pointers (avoids copying large candidate sets).
bool member_dominated_hull(const Vector& x, const std::vector<const Vector*>& X);

/// Minimal sublist with the same conv<=. Exact duplicates keep their first occurrence;
/// the rest are tested in input order against the current survivors.
std::vector<Vector> hull_reduce(const std::vector<Vector>& X);

}  // namespace growth::geometry

#endif  // GROWTH_GEOMETRY_HULL_HPP
