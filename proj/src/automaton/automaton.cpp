#include "growth/automaton/automaton.hpp"

#include <algorithm>
#include <sstream>

#include "growth/bilinear/system_io.hpp"
#include "growth/error.hpp"
#include "growth/numeric/text.hpp"

namespace growth::automaton {

std::size_t TreeAutomaton::index(const std::string& name) const {
  auto it = std::find(states.begin(), states.end(), name);
  if (it == states.end()) throw UndeclaredState("undeclared state '" + name + "'");
  return static_cast<std::size_t>(it - states.begin());
}

TreeAutomaton parse_automaton(const std::string& text) {
  TreeAutomaton a;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  bool declared = false;
  auto state = [&](const std::string& name) {
    try {
      return a.index(name);
    } catch (const UndeclaredState& e) {
      throw UndeclaredState(e.what(), line_no);
    }
  };
  while (std::getline(in, raw)) {
    ++line_no;
    auto w = numeric::split_ws(numeric::strip_comment(raw));
    if (w.empty()) continue;
    const std::string& kw = w[0];
    if (kw == "states") {
      if (declared) throw ParseError("states declared twice", line_no);
      if (w.size() < 2) throw ParseError("no states", line_no);
      a.states.assign(w.begin() + 1, w.end());
      for (std::size_t i = 0; i < a.states.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (a.states[i] == a.states[j]) throw ParseError("state '" + a.states[i] + "' declared twice", line_no);
      a.final.assign(a.states.size(), false);
      declared = true;
      continue;
    }
    if (!declared) throw ParseError("'states' must come first", line_no);
    if (kw == "final") {
      for (std::size_t i = 1; i < w.size(); ++i) a.final[state(w[i])] = true;
    } else if (kw == "leaf0" || kw == "leaf1") {
      if (w.size() != 2) throw ParseError("expected '" + kw + " state'", line_no);
      auto& slot = kw == "leaf0" ? a.leaf0 : a.leaf1;
      std::size_t q = state(w[1]);
      if (slot && *slot != q) throw DeterminismViolation("two " + kw + " rules", line_no);
      slot = q;
    } else if (kw == "trans") {
      std::size_t at = 1;
      if (w.size() == 6) {
        if (w[1] == "J1") throw ParseError("J1 transitions are not allowed", line_no);
        if (w[1] != "J0") throw ParseError("unknown letter '" + w[1] + "'", line_no);
        at = 2;
      }
      if (w.size() != at + 4 || w[at + 2] != "->") throw ParseError("expected 'trans q1 q2 -> q'", line_no);
      auto key = std::make_pair(state(w[at]), state(w[at + 1]));
      std::size_t q = state(w[at + 3]);
      auto [it, inserted] = a.trans.emplace(key, q);
      if (!inserted && it->second != q)
        throw DeterminismViolation("transition on (" + w[at] + ", " + w[at + 1] + ") defined twice", line_no);
    } else {
      throw ParseError("unknown keyword '" + kw + "'", line_no);
    }
  }
  if (!declared) throw ParseError("missing 'states'");
  return a;
}

TreeAutomaton load_automaton(const std::string& path) { return parse_automaton(bilinear::read_file(path)); }

std::string format_automaton(const TreeAutomaton& a) {
  std::ostringstream out;
  out << "states";
  for (const auto& s : a.states) out << ' ' << s;
  out << "\nfinal";
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.final[i]) out << ' ' << a.states[i];
  out << "\n";
  if (a.leaf0) out << "leaf0 " << a.states[*a.leaf0] << "\n";
  if (a.leaf1) out << "leaf1 " << a.states[*a.leaf1] << "\n";
  for (const auto& [k, q] : a.trans)
    out << "trans " << a.states[k.first] << ' ' << a.states[k.second] << " -> " << a.states[q] << "\n";
  return out.str();
}

namespace {

std::optional<std::size_t> run(const TreeAutomaton& a, const TreeNode& n) {
  if (n.is_leaf()) return n.selected ? a.leaf1 : a.leaf0;
  auto l = run(a, *n.left);
  if (!l) return std::nullopt;
  auto r = run(a, *n.right);
  if (!r) return std::nullopt;
  auto it = a.trans.find({*l, *r});
  if (it == a.trans.end()) return std::nullopt;
  return it->second;
}

// Same as run, with leaf selections taken from the bits of `mask` in leaf order.
std::optional<std::size_t> run_mask(const TreeAutomaton& a, const TreeNode& n, unsigned long mask,
                                    std::size_t& next) {
  if (n.is_leaf()) return (mask >> next++) & 1UL ? a.leaf1 : a.leaf0;
  auto l = run_mask(a, *n.left, mask, next);
  auto r = run_mask(a, *n.right, mask, next);
  if (!l || !r) return std::nullopt;
  auto it = a.trans.find({*l, *r});
  if (it == a.trans.end()) return std::nullopt;
  return it->second;
}

}  // namespace

EvalResult evaluate(const TreeAutomaton& a, const Tree& t) {
  auto q = run(a, *t);
  if (!q) return {EvalResult::Kind::Stuck, std::nullopt};
  return {a.final[*q] ? EvalResult::Kind::Accept : EvalResult::Kind::Reject, q};
}

bilinear::BilinearSystem compile(const TreeAutomaton& a) {
  if (!a.leaf0 && !a.leaf1) throw NoLeafRule("automaton has no leaf rule");
  std::vector<bilinear::Term> terms;
  for (const auto& [k, q] : a.trans) terms.push_back({q, k.first, k.second, 1});
  bilinear::Vector v0(a.size()), f(a.size());
  if (a.leaf0) v0[*a.leaf0] += 1;
  if (a.leaf1) v0[*a.leaf1] += 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.final[i]) f[i] = 1;
  return bilinear::BilinearSystem(a.size(), std::move(terms), std::move(v0), std::move(f), a.states);
}

std::optional<TreeAutomaton> decompile(const bilinear::BilinearSystem& s) {
  TreeAutomaton a;
  for (std::size_t i = 0; i < s.dim(); ++i)
    a.states.push_back(s.state_names().empty() ? "q" + std::to_string(i + 1) : s.state_names()[i]);
  a.final.assign(s.dim(), false);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const auto& f = s.f()[i];
    if (f.is_zero()) continue;
    if (f != 1) return std::nullopt;
    a.final[i] = true;
  }
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const auto& v = s.v0()[i];
    if (v.is_zero()) continue;
    if (!v.is_rational() || v.rational_value().get_den() != 1) return std::nullopt;
    for (long c = v.rational_value().get_num().get_si(); c > 0; --c) {
      if (!a.leaf0) a.leaf0 = i;
      else if (!a.leaf1) a.leaf1 = i;
      else return std::nullopt;
    }
  }
  for (const auto& t : s.terms()) {
    if (t.coeff != 1) return std::nullopt;
    if (!a.trans.emplace(std::make_pair(t.left, t.right), t.target).second) return std::nullopt;
  }
  return a;
}

std::vector<numeric::Integer> state_counts(const TreeAutomaton& a, const Tree& shape) {
  std::vector<numeric::Integer> c(a.size(), 0);
  if (shape->is_leaf()) {
    if (a.leaf0) c[*a.leaf0] += 1;
    if (a.leaf1) c[*a.leaf1] += 1;
    return c;
  }
  auto l = state_counts(a, shape->left);
  auto r = state_counts(a, shape->right);
  for (const auto& [k, q] : a.trans)
    if (l[k.first] != 0 && r[k.second] != 0) c[q] += l[k.first] * r[k.second];
  return c;
}

SubsetCount count_accepted_subsets(const TreeAutomaton& a, const Tree& shape, std::size_t exhaustive_cap) {
  SubsetCount out;
  auto c = state_counts(a, shape);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.final[i]) out.count += c[i];
  const std::size_t leaves = leaf_count(shape);
  if (leaves > exhaustive_cap || leaves >= 63) return out;
  numeric::Integer brute = 0;
  for (unsigned long mask = 0; mask < (1UL << leaves); ++mask) {
    std::size_t next = 0;
    auto q = run_mask(a, *shape, mask, next);
    if (q && a.final[*q]) brute += 1;
  }
  if (brute != out.count)
    throw Error("exhaustive count " + brute.get_str() + " differs from state-count pass " + out.count.get_str() +
                " on " + to_string(shape));
  out.exhaustive_checked = true;
  return out;
}

bilinear::Vector fold_shape(const bilinear::BilinearSystem& s, const Tree& shape) {
  if (shape->is_leaf()) return s.v0();
  return s.apply(fold_shape(s, shape->left), fold_shape(s, shape->right));
}

}  // namespace growth::automaton
