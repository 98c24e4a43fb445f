#ifndef GROWTH_AUTOMATON_TREE_TERM_HPP
#define GROWTH_AUTOMATON_TREE_TERM_HPP

#include <memory>
#include <string>
#include <string_view>

namespace growth::automaton {

struct TreeNode;
using Tree = std::shared_ptr<const TreeNode>;

/// Proper binary term: a leaf (selected or not) or J(left, right). Only leaves carry a
/// selection, so every term encodes a consistent set.
struct TreeNode {
  Tree left, right;
  bool selected = false;
  bool is_leaf() const { return !left; }
};

Tree leaf(bool selected = false);
Tree join(Tree left, Tree right);

std::size_t leaf_count(const Tree& t);

/// `J(0,J(1,0))`: leaves are `0`/`1` (unselected/selected), internal nodes `J(.,.)`.
Tree parse_term(std::string_view text);
std::string to_string(const Tree& t);

}  // namespace growth::automaton

#endif  // GROWTH_AUTOMATON_TREE_TERM_HPP
