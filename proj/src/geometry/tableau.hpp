// Dense simplex tableau over exact field elements with Bland's pivoting rule.
#ifndef GROWTH_SRC_GEOMETRY_TABLEAU_HPP
#define GROWTH_SRC_GEOMETRY_TABLEAU_HPP

#include <functional>
#include <vector>

#include "growth/numeric/algebraic.hpp"

namespace growth::geometry::detail {

using numeric::AlgebraicNumber;

/// Rows are equalities sum_c a[r][c] x_c = b[r] with x >= 0, in canonical form for
/// `basis` (basic columns are unit vectors, b >= 0). Maximizes cost . x.
class Tableau {
 public:
  enum class Outcome { Optimal, Unbounded, Stopped };

  Tableau(std::size_t rows, std::size_t cols);

  std::vector<std::vector<AlgebraicNumber>> a;
  std::vector<AlgebraicNumber> b;
  std::vector<std::size_t> basis;
  /// Columns that may never enter (removed artificials).
  std::vector<bool> blocked;

  /// Installs an objective and recomputes reduced costs for the current basis.
  void set_objective(const std::vector<AlgebraicNumber>& cost);
  const AlgebraicNumber& value() const { return z_; }

  /// Runs primal simplex. `stop` is consulted after every pivot.
  Outcome run(const std::function<bool(const AlgebraicNumber&)>& stop = {});

  void pivot(std::size_t r, std::size_t c);
  /// Value of every column in the current basic solution.
  std::vector<AlgebraicNumber> solution() const;

  std::size_t rows() const { return b.size(); }
  std::size_t cols() const { return blocked.size(); }

 private:
  std::vector<AlgebraicNumber> d_;  // reduced costs
  AlgebraicNumber z_;
};

}  // namespace growth::geometry::detail

#endif  // GROWTH_SRC_GEOMETRY_TABLEAU_HPP
