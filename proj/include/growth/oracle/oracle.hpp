#ifndef GROWTH_ORACLE_ORACLE_HPP
#define GROWTH_ORACLE_ORACLE_HPP

#include <string>
#include <vector>

#include "growth/automaton/automaton.hpp"
#include "growth/bilinear/system.hpp"

namespace growth::oracle {

using automaton::Tree;
using bilinear::AlgebraicNumber;

/// All proper binary ordered shapes with k leaves (Catalan(k-1) of them), built by
/// the split of the root into i and k - i leaves.
class ShapeEnumerator {
 public:
  explicit ShapeEnumerator(std::size_t k);
  std::size_t leaf_count() const { return k_; }
  /// Shapes in a fixed order: by left size, then left shape, then right shape.
  const std::vector<Tree>& shapes() const { return table_.at(k_); }
  static numeric::Integer catalan(std::size_t n);

 private:
  std::size_t k_;
  std::vector<std::vector<Tree>> table_;
};

/// max F.v over B^k(V0). Throws LevelBudgetExceeded.
AlgebraicNumber max_count_via_levels(const bilinear::BilinearSystem& s, std::size_t k, bool prune = true);
/// Same for every k in 1..kmax with one level computation (index 0 unused).
std::vector<AlgebraicNumber> max_counts_via_levels(const bilinear::BilinearSystem& s, std::size_t kmax,
                                                   bool prune = true);

struct ShapeOptions {
  std::size_t cap = 12;             // CapExceeded above this many leaves
  std::size_t exhaustive_cap = 10;  // brute-force cross-check up to this many leaves
  unsigned threads = 1;
};

/// max over all k-leaf shapes of the accepted-subset count. Throws CapExceeded.
numeric::Integer max_count_via_shapes(const automaton::TreeAutomaton& a, std::size_t k,
                                      const ShapeOptions& opt = {});

struct AuditLine {
  std::size_t k;
  AlgebraicNumber count, bound;  // bound = C * alpha^k
};

/// Checks max_count_via_levels(k) <= C * alpha^k for k = 1..kmax, exactly.
/// Throws AuditFailure naming the first violating k.
std::vector<AuditLine> bound_audit(const bilinear::BilinearSystem& s, const AlgebraicNumber& C,
                                   const AlgebraicNumber& alpha, std::size_t kmax);

/// Independent ground truth on small orders: maximum accepted-subset count over all
/// labeled trees on n vertices (Pruefer sequences), each tree rooted at vertex 0 and
/// binarized by chaining its children. n <= 9.
numeric::Integer max_count_via_labeled_trees(const automaton::TreeAutomaton& a, std::size_t n);

/// Binary term of a rooted tree given by child lists: a vertex with children c1..cm
/// becomes J(...J(J(leaf, c1), c2)..., cm).
Tree binarize(const std::vector<std::vector<std::size_t>>& children, std::size_t root);

}  // namespace growth::oracle

#endif  // GROWTH_ORACLE_ORACLE_HPP
