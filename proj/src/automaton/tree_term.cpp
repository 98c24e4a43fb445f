#include "growth/automaton/tree_term.hpp"

#include <cctype>

#include "growth/error.hpp"

namespace growth::automaton {

Tree leaf(bool selected) {
  auto n = std::make_shared<TreeNode>();
  n->selected = selected;
  return n;
}

Tree join(Tree left, Tree right) {
  if (!left || !right) throw Error("join needs two subterms");
  auto n = std::make_shared<TreeNode>();
  n->left = std::move(left);
  n->right = std::move(right);
  return n;
}

std::size_t leaf_count(const Tree& t) {
  return t->is_leaf() ? 1 : leaf_count(t->left) + leaf_count(t->right);
}

namespace {

struct TermParser {
  std::string_view s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  void expect(char c) {
    skip();
    if (pos >= s.size() || s[pos] != c)
      throw ParseError("term: expected '" + std::string(1, c) + "' at offset " + std::to_string(pos));
    ++pos;
  }
  Tree term() {
    skip();
    if (pos >= s.size()) throw ParseError("term: unexpected end");
    char c = s[pos];
    if (c == '0' || c == '1') {
      ++pos;
      return leaf(c == '1');
    }
    if (c == 'J') {
      ++pos;
      expect('(');
      Tree l = term();
      expect(',');
      Tree r = term();
      expect(')');
      return join(l, r);
    }
    throw ParseError("term: unexpected '" + std::string(1, c) + "' at offset " + std::to_string(pos));
  }
};

}  // namespace

Tree parse_term(std::string_view text) {
  TermParser p{text};
  Tree t = p.term();
  p.skip();
  if (p.pos != text.size()) throw ParseError("term: trailing characters");
  return t;
}

std::string to_string(const Tree& t) {
  if (t->is_leaf()) return t->selected ? "1" : "0";
  return "J(" + to_string(t->left) + "," + to_string(t->right) + ")";
}

}  // namespace growth::automaton
