#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>

#include "growth/error.hpp"
#include "growth/geometry/hull.hpp"
#include "growth/geometry/lp.hpp"
#include "growth/numeric/text.hpp"

using namespace growth;
using namespace growth::geometry;
using numeric::frac;
using numeric::Rational;

namespace {

Vector vec(std::initializer_list<Rational> xs) {
  Vector v;
  for (const auto& x : xs) v.emplace_back(x);
  return v;
}

using Matrix = std::vector<std::vector<Rational>>;

// Solves a square system by Gauss-Jordan; nullopt when singular.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational k = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= k * a[c][j];
      b[r] -= k * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Oracle: optimum of a bounded rational LP (rows . x <= rhs, x >= 0) by enumerating
// every vertex as the solution of n tight constraints.
std::optional<Rational> vertex_max(const Matrix& rows, const std::vector<Rational>& rhs,
                                   const std::vector<Rational>& obj) {
  const std::size_t n = obj.size();
  Matrix all = rows;
  std::vector<Rational> all_rhs = rhs;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n);
    e[j] = -1;
    all.push_back(e);
    all_rhs.push_back(0);
  }
  const std::size_t m = all.size();
  std::optional<Rational> best;
  std::vector<std::size_t> pick(n);
  std::vector<bool> mask(m, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(n), true);
  do {
    Matrix a;
    std::vector<Rational> b;
    for (std::size_t i = 0; i < m; ++i)
      if (mask[i]) a.push_back(all[i]), b.push_back(all_rhs[i]);
    auto x = solve(a, b);
    if (!x) continue;
    bool feasible = true;
    for (std::size_t i = 0; i < m && feasible; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s += all[i][j] * (*x)[j];
      if (s > all_rhs[i]) feasible = false;
    }
    if (!feasible) continue;
    Rational v = 0;
    for (std::size_t j = 0; j < n; ++j) v += obj[j] * (*x)[j];
    if (!best || v > *best) best = v;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return best;
}

}  // namespace

TEST_CASE("lp_solve examples") {
  LPProblem p;
  p.rows = {vec({1})};
  p.senses = {Sense::Le};
  p.rhs = vec({1});
  p.objective = vec({1});
  auto r = lp_solve(p);
  REQUIRE(r.status == LPResult::Status::Optimal);
  CHECK(r.value == AlgebraicNumber(1));
  CHECK(r.point == vec({1}));

  LPProblem u;
  u.objective = vec({1});
  CHECK(lp_solve(u).status == LPResult::Status::Unbounded);

  // lambda >= 0, sum = 1, lambda.{(1,0),(0,1)} >= (3/4,3/4)
  LPProblem f;
  f.rows = {vec({1, 1}), vec({1, 0}), vec({0, 1})};
  f.senses = {Sense::Eq, Sense::Ge, Sense::Ge};
  f.rhs = vec({1, frac(3, 4), frac(3, 4)});
  f.objective = vec({0, 0});
  CHECK(lp_solve(f).status == LPResult::Status::Infeasible);

  // minimization with a negative right-hand side: min x+y s.t. -x-y <= -2, x - y = 0
  LPProblem m;
  m.rows = {vec({-1, -1}), vec({1, -1})};
  m.senses = {Sense::Le, Sense::Eq};
  m.rhs = vec({-2, 0});
  m.objective = vec({1, 1});
  m.direction = Direction::Min;
  auto mr = lp_solve(m);
  REQUIRE(mr.status == LPResult::Status::Optimal);
  CHECK(mr.value == AlgebraicNumber(2));
  CHECK(mr.point == vec({1, 1}));

  CHECK_THROWS_AS(lp_solve(LPProblem{{vec({1, 2})}, {Sense::Le}, vec({1}), vec({1}), Direction::Max}),
                  DimensionMismatch);
}

TEST_CASE("lp_solve agrees with vertex enumeration on random rational problems") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-4, 6), rhs(1, 12), den(1, 3);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 2 + round % 2, m = 2 + round % 3;
    Matrix rows;
    std::vector<Rational> b, obj;
    LPProblem p;
    for (std::size_t i = 0; i < m + n; ++i) {
      std::vector<Rational> row(n);
      if (i < m) {
        for (auto& x : row) x = frac(coef(rng), den(rng));
      } else {
        row[i - m] = 1;  // box keeps everything bounded
      }
      Rational bi = i < m ? frac(rhs(rng), den(rng)) : Rational(10);
      rows.push_back(row);
      b.push_back(bi);
      Vector rv;
      for (const auto& x : row) rv.emplace_back(x);
      p.rows.push_back(rv);
      p.senses.push_back(Sense::Le);
      p.rhs.emplace_back(bi);
    }
    for (std::size_t j = 0; j < n; ++j) {
      obj.push_back(frac(coef(rng), den(rng)));
      p.objective.emplace_back(obj.back());
    }
    auto expected = vertex_max(rows, b, obj);
    auto got = lp_solve(p);
    REQUIRE(expected.has_value());  // origin is always feasible
    REQUIRE(got.status == LPResult::Status::Optimal);
    CHECK(got.value == AlgebraicNumber(*expected));
    for (std::size_t i = 0; i < rows.size(); ++i)
      CHECK((p.rhs[i] - dot(p.rows[i], got.point)).sign() >= 0);
  }
}

TEST_CASE("member_dominated_hull examples") {
  std::vector<Vector> X = {vec({1, 0}), vec({0, 1})};
  CHECK(member_dominated_hull(vec({frac(1, 2), frac(1, 2)}), X));
  CHECK_FALSE(member_dominated_hull(vec({1, 1}), X));
  CHECK_THROWS_AS(member_dominated_hull(vec({1, 1, 1}), X), DimensionMismatch);

  auto f = numeric::parse_field("x^2 - 2 ; interval 1 2");
  auto inv = numeric::parse_number("1/2a", f);  // 1/sqrt2
  std::vector<Vector> printed = {{0, 0, inv}, vec({0, frac(1, 2), frac(1, 2)}), {inv, inv, 0}};
  CHECK(member_dominated_hull({inv, inv, 0}, printed));
  // slightly larger than V0/sqrt2 escapes
  auto big = inv + AlgebraicNumber(frac(1, 1000));
  CHECK_FALSE(member_dominated_hull({big, big, 0}, printed));
}

TEST_CASE("hull_reduce examples") {
  CHECK(hull_reduce({vec({1, 0}), vec({0, 1}), vec({frac(1, 2), frac(1, 2)})}) ==
        std::vector<Vector>{vec({1, 0}), vec({0, 1})});
  CHECK(hull_reduce({vec({1, 0}), vec({frac(1, 2), 0})}) == std::vector<Vector>{vec({1, 0})});
  CHECK(hull_reduce({vec({1, 0}), vec({1, 0}), vec({0, 1})}) ==
        std::vector<Vector>{vec({1, 0}), vec({0, 1})});
}

TEST_CASE("hull properties on random sets") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(0, 6);
  for (int round = 0; round < 25; ++round) {
    std::vector<Vector> X;
    for (int i = 0; i < 7; ++i) X.push_back(vec({frac(num(rng), 3), frac(num(rng), 3), frac(num(rng), 3)}));
    if (std::all_of(X.begin(), X.end(), [](const Vector& v) {
          return std::all_of(v.begin(), v.end(), [](const AlgebraicNumber& x) { return x.is_zero(); });
        }))
      continue;
    auto Y = hull_reduce(X);
    CHECK(hull_reduce(Y) == Y);
    for (const auto& x : X) CHECK(member_dominated_hull(x, Y));
    for (std::size_t i = 0; i < Y.size() && Y.size() > 1; ++i) {
      std::vector<Vector> rest = Y;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      CHECK_FALSE(member_dominated_hull(Y[i], rest));
    }
    // reversed input order gives the same conv<=
    std::vector<Vector> R(X.rbegin(), X.rend());
    auto Z = hull_reduce(R);
    for (const auto& z : Z) CHECK(member_dominated_hull(z, Y));
    for (const auto& y : Y) CHECK(member_dominated_hull(y, Z));
    // monotone: anything below a member is a member
    for (const auto& y : Y) {
      Vector lower = y;
      for (auto& c : lower) c = c.scaled(frac(1, 2));
      CHECK(member_dominated_hull(lower, Y));
    }
  }
}
