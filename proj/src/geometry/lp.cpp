#include "growth/geometry/lp.hpp"

#include "growth/error.hpp"
#include "tableau.hpp"

namespace growth::geometry {

LPResult lp_solve(const LPProblem& p) {
  const std::size_t m = p.rows.size();
  const std::size_t n = p.objective.size();
  if (p.senses.size() != m || p.rhs.size() != m)
    throw DimensionMismatch("LP: rows, senses and rhs differ in length");
  for (const auto& row : p.rows)
    if (row.size() != n) throw DimensionMismatch("LP: constraint row has wrong dimension");

  // columns: n structural, one slack/surplus per inequality, one artificial per Ge/Eq row
  std::vector<Sense> sense = p.senses;
  std::vector<bool> flip(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (p.rhs[i].sign() < 0) {
      flip[i] = true;
      if (sense[i] == Sense::Le) sense[i] = Sense::Ge;
      else if (sense[i] == Sense::Ge) sense[i] = Sense::Le;
    }
  }
  std::size_t slacks = 0, artificials = 0;
  for (auto s : sense) {
    if (s != Sense::Eq) ++slacks;
    if (s != Sense::Le) ++artificials;
  }
  const std::size_t cols = n + slacks + artificials;
  detail::Tableau t(m, cols);
  std::size_t next_slack = n, next_art = n + slacks;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.a[i][j] = flip[i] ? -p.rows[i][j] : p.rows[i][j];
    t.b[i] = flip[i] ? -p.rhs[i] : p.rhs[i];
    if (sense[i] == Sense::Le) {
      t.a[i][next_slack] = 1;
      t.basis[i] = next_slack++;
    } else {
      if (sense[i] == Sense::Ge) t.a[i][next_slack++] = -1;
      t.a[i][next_art] = 1;
      t.basis[i] = next_art++;
    }
  }

  LPResult result;
  if (artificials > 0) {
    std::vector<AlgebraicNumber> phase1(cols);
    for (std::size_t c = n + slacks; c < cols; ++c) phase1[c] = -1;
    t.set_objective(phase1);
    t.run();
    if (t.value().sign() < 0) return result;  // Infeasible
    // drive zero-valued artificials out of the basis; rows with no other support are redundant
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (t.basis[r] < n + slacks) continue;
      for (std::size_t c = 0; c < n + slacks; ++c) {
        if (!t.a[r][c].is_zero()) {
          t.pivot(r, c);
          break;
        }
      }
    }
    for (std::size_t c = n + slacks; c < cols; ++c) t.blocked[c] = true;
  }

  std::vector<AlgebraicNumber> cost(cols);
  for (std::size_t j = 0; j < n; ++j)
    cost[j] = p.direction == Direction::Max ? p.objective[j] : -p.objective[j];
  t.set_objective(cost);
  if (t.run() == detail::Tableau::Outcome::Unbounded) {
    result.status = LPResult::Status::Unbounded;
    return result;
  }
  result.status = LPResult::Status::Optimal;
  result.value = p.direction == Direction::Max ? t.value() : -t.value();
  auto x = t.solution();
  result.point.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
  return result;
}

}  // namespace growth::geometry
