#include "growth/search/search.hpp"

#include <set>

#include "growth/error.hpp"
#include "growth/geometry/hull.hpp"
#include "growth/util/parallel.hpp"

namespace growth::search {

namespace {

struct ReprLess {
  bool operator()(const Vector& a, const Vector& b) const { return geometry::repr_less(a, b); }
};

std::vector<AlgebraicNumber> level_diagnostics(const bilinear::BilinearSystem& s, const AlgebraicNumber& alpha,
                                               std::size_t kmax) {
  std::vector<AlgebraicNumber> out(1);
  if (kmax == 0) return out;
  try {
    auto lv = bilinear::bk_levels(s, kmax, {true, 20000});
    AlgebraicNumber inv = alpha.inverse(), scale = inv;
    for (std::size_t k = 1; k <= kmax; ++k, scale *= inv) out.push_back(bilinear::max_f(s, lv[k]) * scale);
  } catch (const LevelBudgetExceeded&) {
  }
  return out;
}

}  // namespace

SearchResult find_certificate(const bilinear::BilinearSystem& s, const AlgebraicNumber& alpha,
                              const std::vector<Vector>& seeds, const SearchConfig& cfg,
                              const std::vector<Vector>& resume,
                              const std::function<void(const IterationTrace&)>& progress) {
  std::vector<Vector> start{s.scale_initial(alpha)};
  for (const auto& v : seeds) {
    geometry::check_dims(v, s.v0(), "seed");
    start.push_back(v);
  }
  for (const auto& v : resume) {
    geometry::check_dims(v, s.v0(), "resume vector");
    start.push_back(v);
  }
  SearchResult r;
  r.X = geometry::hull_reduce(start);
  // vectors of X whose pairs have all been tested, by representation
  std::set<Vector, ReprLess> settled;

  auto finish = [&](SearchResult::Status st) {
    r.status = st;
    r.C = bilinear::max_f(s, r.X);
    if (st == SearchResult::Status::BudgetExhausted) r.scaled_level_max = level_diagnostics(s, alpha, cfg.diagnostic_kmax);
    return r;
  };

  while (true) {
    const std::size_t m = r.X.size();
    std::vector<bool> fresh(m);
    for (std::size_t i = 0; i < m; ++i) fresh[i] = !settled.count(r.X[i]);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (fresh[i] || fresh[j]) pairs.emplace_back(i, j);
    if (pairs.empty()) return finish(SearchResult::Status::Found);
    if (r.iterations >= cfg.max_iterations) return finish(SearchResult::Status::BudgetExhausted);
    ++r.iterations;

    std::vector<const Vector*> ptrs;
    for (const auto& x : r.X) ptrs.push_back(&x);
    std::vector<std::optional<Vector>> escaped(pairs.size());
    util::parallel_for(pairs.size(), cfg.threads, [&](std::size_t p) {
      Vector v = s.apply(r.X[pairs[p].first], r.X[pairs[p].second]);
      if (!geometry::member_dominated_hull(v, ptrs)) escaped[p] = std::move(v);
    });

    std::vector<Vector> next = r.X;
    std::set<Vector, ReprLess> added;
    for (auto& e : escaped)
      if (e && added.insert(*e).second) next.push_back(std::move(*e));
    for (const auto& x : r.X) settled.insert(x);
    IterationTrace t{r.iterations, 0, added.size(), {}};
    if (!added.empty()) r.X = geometry::hull_reduce(next);
    t.size = r.X.size();
    t.max_f = bilinear::max_f(s, r.X);
    r.trace.push_back(t);
    if (progress) progress(t);
    if (added.empty()) return finish(SearchResult::Status::Found);
    if (r.X.size() > cfg.max_vectors) return finish(SearchResult::Status::BudgetExhausted);
  }
}

}  // namespace growth::search
