#ifndef GROWTH_BILINEAR_SYSTEM_HPP
#define GROWTH_BILINEAR_SYSTEM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "growth/geometry/vector.hpp"

namespace growth::bilinear {

using geometry::AlgebraicNumber;
using geometry::Vector;
using numeric::Rational;

/// B(u, v)[target] += coeff * u[left] * v[right]. Indices are 0-based.
struct Term {
  std::size_t target, left, right;
  Rational coeff;
};

/// (B, V0, F) with nonnegative data. Immutable once built.
class BilinearSystem {
 public:
  /// Validates indices, nonnegativity and uniqueness of (target, left, right).
  BilinearSystem(std::size_t dim, std::vector<Term> terms, Vector v0, Vector f,
                 std::vector<std::string> state_names = {});

  std::size_t dim() const { return dim_; }
  /// Sorted by (target, left, right).
  const std::vector<Term>& terms() const { return terms_; }
  const Vector& v0() const { return v0_; }
  const Vector& f() const { return f_; }
  /// Coordinate names (e.g. automaton states); empty when unnamed.
  const std::vector<std::string>& state_names() const { return names_; }

  /// B(u, v). Throws DimensionMismatch.
  Vector apply(const Vector& u, const Vector& v) const;

  /// V0 / alpha. Throws NonPositiveScale unless alpha > 0.
  Vector scale_initial(const AlgebraicNumber& alpha) const;

  /// Same B and F with another initial vector.
  BilinearSystem with_initial(Vector v0) const;

 private:
  std::size_t dim_;
  std::vector<Term> terms_;
  Vector v0_, f_;
  std::vector<std::string> names_;
};

/// Trimmed system plus kept[i] = original index of new coordinate i.
struct TrimResult {
  BilinearSystem system;
  std::vector<std::size_t> kept;
};

/// Accessible coordinates: least set containing supp(V0) and closed under B.
std::vector<bool> accessible(const BilinearSystem& s);
/// Co-accessible coordinates relative to the accessible set.
std::vector<bool> coaccessible(const BilinearSystem& s, const std::vector<bool>& acc);

/// Keeps coordinates both accessible and co-accessible. Throws EmptySystem.
TrimResult trim(const BilinearSystem& s);

/// Restricts v to the kept coordinates.
Vector project(const Vector& v, const std::vector<std::size_t>& kept);
/// Re-embeds a trimmed vector into dimension `dim` (zeros elsewhere).
Vector embed(const Vector& v, const std::vector<std::size_t>& kept, std::size_t dim);

/// levels[k] for k = 1..kmax (index 0 unused).
struct Levels {
  std::vector<std::vector<Vector>> levels;
  const std::vector<Vector>& operator[](std::size_t k) const { return levels.at(k); }
  std::size_t kmax() const { return levels.empty() ? 0 : levels.size() - 1; }
};

struct LevelOptions {
  /// Drop vectors dominated componentwise by another vector of the same level.
  bool prune = true;
  /// LevelBudgetExceeded when a level grows beyond this many vectors.
  std::size_t cap = 100000;
};

/// B^k(V0) by the inductive definition, deduplicated, in generation order.
Levels bk_levels(const BilinearSystem& s, std::size_t kmax, const LevelOptions& opt = {});
/// Same, starting from an arbitrary level-1 vector.
Levels bk_levels_from(const BilinearSystem& s, const Vector& start, std::size_t kmax,
                      const LevelOptions& opt = {});

/// max F.v over a nonempty vector list (zero for an empty one).
AlgebraicNumber max_f(const BilinearSystem& s, const std::vector<Vector>& vs);

}  // namespace growth::bilinear

#endif  // GROWTH_BILINEAR_SYSTEM_HPP
