#ifndef GROWTH_SEARCH_SEARCH_HPP
#define GROWTH_SEARCH_SEARCH_HPP

#include <functional>
#include <vector>

#include "growth/search/certificate.hpp"

namespace growth::search {

struct SearchConfig {
  std::size_t max_iterations = 10000;
  std::size_t max_vectors = 2000;
  unsigned threads = 1;
  /// Level maxima F.v / alpha^k reported on BudgetExhausted, for k up to this.
  std::size_t diagnostic_kmax = 12;
};

struct IterationTrace {
  std::size_t iteration;
  std::size_t size;     // |X| after reduction
  std::size_t escaped;  // products added this round
  AlgebraicNumber max_f;
};

struct SearchResult {
  enum class Status { Found, BudgetExhausted } status;
  std::vector<Vector> X;  // the certificate, or the partial state to resume from
  std::size_t iterations = 0;
  AlgebraicNumber C;      // max F.x over X
  std::vector<IterationTrace> trace;
  /// On BudgetExhausted: max F.v over level k divided by alpha^k (index 0 unused).
  std::vector<AlgebraicNumber> scaled_level_max;
};

/// Algorithm: X = Hull<=({V0/alpha} + seeds); while some B(x, y) escapes conv<=(X),
/// add every escaping product of the round and reduce again. Pairs whose two vectors
/// were already present last round are not retested: conv<=(X) only grows.
/// `resume`, when nonempty, is added to the starting set. Throws NonPositiveScale.
SearchResult find_certificate(const bilinear::BilinearSystem& s, const AlgebraicNumber& alpha,
                              const std::vector<Vector>& seeds, const SearchConfig& cfg = {},
                              const std::vector<Vector>& resume = {},
                              const std::function<void(const IterationTrace&)>& progress = {});

}  // namespace growth::search

#endif  // GROWTH_SEARCH_SEARCH_HPP
