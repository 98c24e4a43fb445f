#include "growth/oracle/oracle.hpp"

#include <functional>

#include "growth/error.hpp"
#include "growth/util/parallel.hpp"

namespace growth::oracle {

ShapeEnumerator::ShapeEnumerator(std::size_t k) : k_(k), table_(k + 1) {
  if (k == 0) throw Error("shapes need at least one leaf");
  table_[1] = {automaton::leaf()};
  for (std::size_t n = 2; n <= k; ++n)
    for (std::size_t i = 1; i < n; ++i)
      for (const auto& l : table_[i])
        for (const auto& r : table_[n - i]) table_[n].push_back(automaton::join(l, r));
}

numeric::Integer ShapeEnumerator::catalan(std::size_t n) {
  numeric::Integer c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
  return c / (n + 1);
}

std::vector<AlgebraicNumber> max_counts_via_levels(const bilinear::BilinearSystem& s, std::size_t kmax,
                                                   bool prune) {
  auto lv = bilinear::bk_levels(s, kmax, {prune, 100000});
  std::vector<AlgebraicNumber> out(kmax + 1);
  for (std::size_t k = 1; k <= kmax; ++k) out[k] = bilinear::max_f(s, lv[k]);
  return out;
}

AlgebraicNumber max_count_via_levels(const bilinear::BilinearSystem& s, std::size_t k, bool prune) {
  return max_counts_via_levels(s, k, prune)[k];
}

numeric::Integer max_count_via_shapes(const automaton::TreeAutomaton& a, std::size_t k, const ShapeOptions& opt) {
  if (k > opt.cap) throw CapExceeded(std::to_string(k) + " leaves exceeds the shape cap " + std::to_string(opt.cap));
  ShapeEnumerator e(k);
  const auto& shapes = e.shapes();
  std::vector<numeric::Integer> counts(shapes.size());
  util::parallel_for(shapes.size(), opt.threads, [&](std::size_t i) {
    counts[i] = automaton::count_accepted_subsets(a, shapes[i], opt.exhaustive_cap).count;
  });
  numeric::Integer best = 0;
  for (const auto& c : counts)
    if (c > best) best = c;
  return best;
}

std::vector<AuditLine> bound_audit(const bilinear::BilinearSystem& s, const AlgebraicNumber& C,
                                   const AlgebraicNumber& alpha, std::size_t kmax) {
  auto counts = max_counts_via_levels(s, kmax);
  std::vector<AuditLine> out;
  AlgebraicNumber power = alpha;
  for (std::size_t k = 1; k <= kmax; ++k, power *= alpha) {
    AuditLine line{k, counts[k], C * power};
    if (line.count > line.bound)
      throw AuditFailure("k = " + std::to_string(k) + ": count " + line.count.to_string() + " exceeds C*alpha^k",
                         static_cast<int>(k));
    out.push_back(line);
  }
  return out;
}

Tree binarize(const std::vector<std::vector<std::size_t>>& children, std::size_t root) {
  Tree t = automaton::leaf();
  for (std::size_t c : children[root]) t = automaton::join(t, binarize(children, c));
  return t;
}

numeric::Integer max_count_via_labeled_trees(const automaton::TreeAutomaton& a, std::size_t n) {
  if (n == 0 || n > 9) throw CapExceeded("labeled-tree oracle handles 1..9 vertices");
  auto count_of = [&](const Tree& t) {
    auto c = automaton::state_counts(a, t);
    numeric::Integer total = 0;
    for (std::size_t q = 0; q < a.size(); ++q)
      if (a.final[q]) total += c[q];
    return total;
  };
  if (n == 1) return count_of(automaton::leaf());
  if (n == 2) return count_of(automaton::join(automaton::leaf(), automaton::leaf()));
  numeric::Integer best = 0;
  std::vector<std::size_t> seq(n - 2, 0);
  while (true) {
    // decode the Pruefer sequence into an edge list
    std::vector<std::size_t> degree(n, 1);
    for (std::size_t x : seq) ++degree[x];
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t x : seq) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      adj[leaf].push_back(x);
      adj[x].push_back(leaf);
      --degree[leaf];
      --degree[x];
    }
    std::size_t u = n, v = n;
    for (std::size_t i = 0; i < n; ++i)
      if (degree[i] == 1) (u == n ? u : v) = i;
    adj[u].push_back(v);
    adj[v].push_back(u);
    // root at 0, children in increasing label order
    std::vector<std::vector<std::size_t>> children(n);
    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t x, std::size_t parent) {
      for (std::size_t y : adj[x])
        if (y != parent) {
          children[x].push_back(y);
          dfs(y, x);
        }
    };
    dfs(0, n);
    auto c = count_of(binarize(children, 0));
    if (c > best) best = c;
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return best;
}

}  // namespace growth::oracle
