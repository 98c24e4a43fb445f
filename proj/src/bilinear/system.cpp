#include "growth/bilinear/system.hpp"

#include <algorithm>
#include <tuple>

#include "growth/error.hpp"

namespace growth::bilinear {

namespace {

auto key(const Term& t) { return std::tie(t.target, t.left, t.right); }

}  // namespace

BilinearSystem::BilinearSystem(std::size_t dim, std::vector<Term> terms, Vector v0, Vector f,
                               std::vector<std::string> state_names)
    : dim_(dim), terms_(std::move(terms)), v0_(std::move(v0)), f_(std::move(f)),
      names_(std::move(state_names)) {
  if (dim_ == 0) throw DimensionMismatch("system dimension must be positive");
  if (v0_.size() != dim_) throw DimensionMismatch("V0 has " + std::to_string(v0_.size()) + " entries, expected " + std::to_string(dim_));
  if (f_.size() != dim_) throw DimensionMismatch("F has " + std::to_string(f_.size()) + " entries, expected " + std::to_string(dim_));
  if (!names_.empty() && names_.size() != dim_) throw DimensionMismatch("state name count differs from dim");
  if (!geometry::nonnegative(v0_)) throw NegativeEntry("V0 must be nonnegative");
  if (!geometry::nonnegative(f_)) throw NegativeEntry("F must be nonnegative");
  for (const auto& t : terms_) {
    if (t.target >= dim_ || t.left >= dim_ || t.right >= dim_)
      throw DimensionMismatch("term index out of range");
    if (sgn(t.coeff) < 0) throw NegativeEntry("term coefficients must be nonnegative");
  }
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return key(a) < key(b); });
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (key(terms_[i - 1]) == key(terms_[i]))
      throw DeterminismViolation("duplicate term (" + std::to_string(terms_[i].target + 1) + ", " +
                                 std::to_string(terms_[i].left + 1) + ", " + std::to_string(terms_[i].right + 1) + ")");
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return sgn(t.coeff) == 0; }),
               terms_.end());
}

Vector BilinearSystem::apply(const Vector& u, const Vector& v) const {
  if (u.size() != dim_ || v.size() != dim_)
    throw DimensionMismatch("apply: expected dimension " + std::to_string(dim_));
  Vector r(dim_);
  for (const auto& t : terms_) {
    const auto& a = u[t.left];
    const auto& b = v[t.right];
    if (a.is_zero() || b.is_zero()) continue;
    AlgebraicNumber p = a * b;
    r[t.target] += t.coeff == 1 ? p : p.scaled(t.coeff);
  }
  return r;
}

Vector BilinearSystem::scale_initial(const AlgebraicNumber& alpha) const {
  if (alpha.sign() <= 0) throw NonPositiveScale("alpha must be positive, got " + alpha.to_string());
  AlgebraicNumber inv = alpha.inverse();
  return geometry::scaled(v0_, inv);
}

BilinearSystem BilinearSystem::with_initial(Vector v0) const {
  return BilinearSystem(dim_, terms_, std::move(v0), f_, names_);
}

std::vector<bool> accessible(const BilinearSystem& s) {
  std::vector<bool> acc(s.dim(), false);
  for (std::size_t i = 0; i < s.dim(); ++i) acc[i] = !s.v0()[i].is_zero();
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& t : s.terms())
      if (!acc[t.target] && acc[t.left] && acc[t.right]) acc[t.target] = changed = true;
  }
  return acc;
}

std::vector<bool> coaccessible(const BilinearSystem& s, const std::vector<bool>& acc) {
  std::vector<bool> co(s.dim(), false);
  for (std::size_t i = 0; i < s.dim(); ++i) co[i] = !s.f()[i].is_zero();
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& t : s.terms()) {
      if (!co[t.target]) continue;
      if (acc[t.right] && !co[t.left]) co[t.left] = changed = true;
      if (acc[t.left] && !co[t.right]) co[t.right] = changed = true;
    }
  }
  return co;
}

TrimResult trim(const BilinearSystem& s) {
  auto acc = accessible(s);
  auto co = coaccessible(s, acc);
  std::vector<std::size_t> kept;
  std::vector<std::size_t> index(s.dim(), s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (acc[i] && co[i]) {
      index[i] = kept.size();
      kept.push_back(i);
    }
  if (kept.empty()) throw EmptySystem("no coordinate is both accessible and co-accessible");
  std::vector<Term> terms;
  for (const auto& t : s.terms())
    if (index[t.target] < s.dim() && index[t.left] < s.dim() && index[t.right] < s.dim())
      terms.push_back({index[t.target], index[t.left], index[t.right], t.coeff});
  std::vector<std::string> names;
  if (!s.state_names().empty())
    for (std::size_t i : kept) names.push_back(s.state_names()[i]);
  return {BilinearSystem(kept.size(), std::move(terms), project(s.v0(), kept), project(s.f(), kept),
                         std::move(names)),
          kept};
}

Vector project(const Vector& v, const std::vector<std::size_t>& kept) {
  Vector r;
  r.reserve(kept.size());
  for (std::size_t i : kept) r.push_back(v.at(i));
  return r;
}

Vector embed(const Vector& v, const std::vector<std::size_t>& kept, std::size_t dim) {
  Vector r(dim);
  for (std::size_t i = 0; i < kept.size(); ++i) r.at(kept[i]) = v.at(i);
  return r;
}

AlgebraicNumber max_f(const BilinearSystem& s, const std::vector<Vector>& vs) {
  AlgebraicNumber best;
  bool first = true;
  for (const auto& v : vs) {
    AlgebraicNumber x = geometry::dot(s.f(), v);
    if (first || x > best) best = x;
    first = false;
  }
  return best;
}

}  // namespace growth::bilinear
