#ifndef GROWTH_AUTOMATON_AUTOMATON_HPP
#define GROWTH_AUTOMATON_AUTOMATON_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "growth/automaton/tree_term.hpp"
#include "growth/bilinear/system.hpp"
#include "growth/numeric/rational.hpp"

namespace growth::automaton {

/// Deterministic bottom-up automaton over {J0, J1, leaf0, leaf1}. Only J0 has
/// transitions; states are indices into `states`.
struct TreeAutomaton {
  std::vector<std::string> states;
  std::vector<bool> final;
  std::optional<std::size_t> leaf0, leaf1;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> trans;

  std::size_t size() const { return states.size(); }
  /// Throws UndeclaredState.
  std::size_t index(const std::string& name) const;
};

/// `states ...`, `final ...`, `leaf0 s`, `leaf1 s`, `trans q1 q2 -> q`, `#` comments.
TreeAutomaton parse_automaton(const std::string& text);
TreeAutomaton load_automaton(const std::string& path);
std::string format_automaton(const TreeAutomaton& a);

struct EvalResult {
  enum class Kind { Accept, Reject, Stuck } kind;
  std::optional<std::size_t> state;  // empty when stuck
};

EvalResult evaluate(const TreeAutomaton& a, const Tree& t);

/// dim = |Q|, one unit term per transition, V0 counts leaf letters, F = finals.
/// Throws NoLeafRule when neither leaf rule exists.
bilinear::BilinearSystem compile(const TreeAutomaton& a);

/// Reads a system back as an automaton when that is possible: 0/1 term coefficients,
/// at most one target per (q1, q2), and V0 made of at most two leaf letters.
std::optional<TreeAutomaton> decompile(const bilinear::BilinearSystem& s);

struct SubsetCount {
  numeric::Integer count;
  /// False when the shape had too many leaves for the exhaustive pass.
  bool exhaustive_checked = false;
};

/// Number of accepted selections on an unselected shape. Counts by brute force over
/// all 2^leaves selections (when leaves <= exhaustive_cap) and by one bottom-up pass
/// of state-count vectors; throws Error if the two ever disagree.
SubsetCount count_accepted_subsets(const TreeAutomaton& a, const Tree& shape,
                                   std::size_t exhaustive_cap = 16);

/// Bottom-up state-count vector of a shape.
std::vector<numeric::Integer> state_counts(const TreeAutomaton& a, const Tree& shape);

/// Folds `apply` over a shape with V0 at the leaves.
bilinear::Vector fold_shape(const bilinear::BilinearSystem& s, const Tree& shape);

}  // namespace growth::automaton

#endif  // GROWTH_AUTOMATON_AUTOMATON_HPP
