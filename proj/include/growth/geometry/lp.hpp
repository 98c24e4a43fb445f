#ifndef GROWTH_GEOMETRY_LP_HPP
#define GROWTH_GEOMETRY_LP_HPP

#include <vector>

#include "growth/geometry/vector.hpp"

namespace growth::geometry {

enum class Sense { Le, Eq, Ge };
enum class Direction { Max, Min };

/// Optimize objective . x subject to rows[i] . x (sense) rhs[i] and x >= 0.
struct LPProblem {
  std::vector<Vector> rows;
  std::vector<Sense> senses;
  Vector rhs;
  Vector objective;
  Direction direction = Direction::Max;
};

struct LPResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  AlgebraicNumber value;
  Vector point;
};

/// Two-phase exact simplex. Throws DimensionMismatch on inconsistent input.
LPResult lp_solve(const LPProblem& p);

}  // namespace growth::geometry

#endif  // GROWTH_GEOMETRY_LP_HPP
