#include "growth/geometry/hull.hpp"

#include <set>

#include "growth/error.hpp"
#include "tableau.hpp"

namespace growth::geometry {

bool member_dominated_hull(const Vector& x, const std::vector<const Vector*>& X) {
  if (X.empty()) throw Error("dominated hull of an empty set");
  for (const Vector* v : X) check_dims(x, *v, "hull membership");

  // only strictly positive coordinates constrain anything, X being nonnegative
  std::vector<std::size_t> rows;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!x[j].is_zero() && x[j].sign() > 0) rows.push_back(j);
  if (rows.empty()) return true;
  for (const Vector* v : X) {
    bool dominates = true;
    for (std::size_t j : rows)
      if ((*v)[j] != x[j] && ((*v)[j] - x[j]).sign() < 0) {
        dominates = false;
        break;
      }
    if (dominates) return true;
  }

  // maximize t with sum_i l_i X_i >= t x on `rows`, sum l = 1, l >= 0;
  // start from l_0 = 1, t = 0 with the surplus variables basic
  const std::size_t m = X.size(), k = 0, tcol = m, J = rows.size();
  detail::Tableau tab(J + 1, m + 1 + J);
  for (std::size_t jj = 0; jj < J; ++jj) {
    const std::size_t j = rows[jj];
    const AlgebraicNumber& base = (*X[k])[j];
    for (std::size_t i = 0; i < m; ++i)
      if (i != k) tab.a[jj][i] = base - (*X[i])[j];
    tab.a[jj][tcol] = x[j];
    tab.a[jj][m + 1 + jj] = 1;
    tab.b[jj] = base;
    tab.basis[jj] = m + 1 + jj;
  }
  for (std::size_t i = 0; i < m; ++i) tab.a[J][i] = 1;
  tab.b[J] = 1;
  tab.basis[J] = k;

  std::vector<AlgebraicNumber> cost(m + 1 + J);
  cost[tcol] = 1;
  tab.set_objective(cost);
  auto reached = [](const AlgebraicNumber& t) { return (t - AlgebraicNumber(1)).sign() >= 0; };
  auto outcome = tab.run(reached);
  if (outcome != detail::Tableau::Outcome::Optimal) return true;
  return reached(tab.value());
}

bool member_dominated_hull(const Vector& x, const std::vector<Vector>& X) {
  std::vector<const Vector*> ptrs;
  ptrs.reserve(X.size());
  for (const auto& v : X) ptrs.push_back(&v);
  return member_dominated_hull(x, ptrs);
}

std::vector<Vector> hull_reduce(const std::vector<Vector>& X) {
  std::vector<const Vector*> unique;
  std::set<const Vector*, bool (*)(const Vector*, const Vector*)> seen(
      [](const Vector* a, const Vector* b) { return repr_less(*a, *b); });
  for (const auto& v : X)
    if (seen.insert(&v).second) unique.push_back(&v);

  std::vector<bool> alive(unique.size(), true);
  for (std::size_t i = 0; i < unique.size(); ++i) {
    std::vector<const Vector*> others;
    for (std::size_t j = 0; j < unique.size(); ++j)
      if (j != i && alive[j]) others.push_back(unique[j]);
    if (others.empty()) continue;
    if (member_dominated_hull(*unique[i], others)) alive[i] = false;
  }
  std::vector<Vector> out;
  for (std::size_t i = 0; i < unique.size(); ++i)
    if (alive[i]) out.push_back(*unique[i]);
  return out;
}

}  // namespace growth::geometry
