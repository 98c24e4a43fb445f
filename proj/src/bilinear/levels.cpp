#include <algorithm>
#include <set>

#include "growth/bilinear/system.hpp"
#include "growth/error.hpp"

namespace growth::bilinear {

namespace {

struct ReprLess {
  bool operator()(const Vector& a, const Vector& b) const { return geometry::repr_less(a, b); }
};

// Drops vectors dominated by another one; the input holds no duplicates. A vector can
// only be dominated by one with a larger coordinate sum, and domination is transitive,
// so scanning by decreasing sum against the survivors so far is enough.
std::vector<Vector> prune_dominated(std::vector<Vector> vs) {
  std::vector<AlgebraicNumber> sums;
  for (const auto& v : vs) {
    AlgebraicNumber t;
    for (const auto& x : v) t += x;
    sums.push_back(t);
  }
  std::vector<std::size_t> order(vs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sums[a] > sums[b]; });
  std::vector<std::size_t> kept;
  std::vector<bool> alive(vs.size(), false);
  for (std::size_t i : order) {
    bool dominated = false;
    for (std::size_t j : kept)
      if (geometry::dominated_by(vs[i], vs[j])) {
        dominated = true;
        break;
      }
    if (!dominated) {
      kept.push_back(i);
      alive[i] = true;
    }
  }
  std::vector<Vector> out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (alive[i]) out.push_back(std::move(vs[i]));
  return out;
}

}  // namespace

Levels bk_levels_from(const BilinearSystem& s, const Vector& start, std::size_t kmax,
                      const LevelOptions& opt) {
  if (kmax < 1) throw Error("kmax must be at least 1");
  Levels out;
  out.levels.resize(kmax + 1);
  out.levels[1] = {start};
  for (std::size_t k = 2; k <= kmax; ++k) {
    std::set<Vector, ReprLess> seen;
    std::vector<Vector> level;
    for (std::size_t i = 1; i < k; ++i) {
      for (const auto& x : out.levels[i]) {
        for (const auto& y : out.levels[k - i]) {
          Vector v = s.apply(x, y);
          if (seen.insert(v).second) {
            level.push_back(std::move(v));
            if (level.size() > opt.cap && !opt.prune)
              throw LevelBudgetExceeded("level " + std::to_string(k) + " exceeds " + std::to_string(opt.cap) + " vectors");
          }
        }
      }
    }
    if (opt.prune) level = prune_dominated(std::move(level));
    if (level.size() > opt.cap)
      throw LevelBudgetExceeded("level " + std::to_string(k) + " exceeds " + std::to_string(opt.cap) + " vectors");
    out.levels[k] = std::move(level);
  }
  return out;
}

Levels bk_levels(const BilinearSystem& s, std::size_t kmax, const LevelOptions& opt) {
  return bk_levels_from(s, s.v0(), kmax, opt);
}

}  // namespace growth::bilinear
