#include "growth/spectral/gadget.hpp"

#include <cctype>
#include <sstream>

#include "growth/bilinear/system_io.hpp"
#include "growth/error.hpp"
#include "growth/numeric/text.hpp"

namespace growth::spectral {

namespace {

Gadget node(GadgetNode n) { return std::make_shared<const GadgetNode>(std::move(n)); }

struct ExprParser {
  std::string_view s;
  const std::map<std::string, Gadget>& names;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("gadget: " + what + " at offset " + std::to_string(pos));
  }
  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  void expect(char c) {
    skip();
    if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  std::string ident() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    if (start == pos) fail("expected a name");
    return std::string(s.substr(start, pos - start));
  }
  Gadget expr() {
    std::string id = ident();
    skip();
    if (id == "B" && pos < s.size() && s[pos] == '(') {
      ++pos;
      Gadget l = expr();
      expect(',');
      Gadget r = expr();
      expect(')');
      return apply(l, r);
    }
    if (id == "V0") return v0_leaf();
    if (id == "HOLE") return hole();
    auto it = names.find(id);
    if (it == names.end()) fail("unknown name '" + id + "'");
    return it->second;
  }
};

struct Evaluator {
  const bilinear::BilinearSystem& s;
  const Vector* fill;
  std::map<const GadgetNode*, Vector> memo;

  Vector run(const GadgetNode& n) {
    switch (n.kind) {
      case GadgetNode::Kind::V0:
        return s.v0();
      case GadgetNode::Kind::Hole:
        if (!fill) throw MultipleHoles("gadget has a hole where none is allowed");
        return *fill;
      case GadgetNode::Kind::Fixed:
        geometry::check_dims(n.value, s.v0(), "gadget vector");
        return n.value;
      case GadgetNode::Kind::Apply:
        break;
    }
    auto it = memo.find(&n);
    if (it != memo.end()) return it->second;
    Vector v = s.apply(run(*n.left), run(*n.right));
    // subtrees without a hole never change between fills
    if (hole_count(n.left) == 0 && hole_count(n.right) == 0) memo.emplace(&n, v);
    return v;
  }
};

}  // namespace

Gadget v0_leaf() { return node({GadgetNode::Kind::V0, nullptr, nullptr, {}, "V0"}); }
Gadget hole() { return node({GadgetNode::Kind::Hole, nullptr, nullptr, {}, "HOLE"}); }
Gadget fixed(std::string name, Vector v) {
  return node({GadgetNode::Kind::Fixed, nullptr, nullptr, std::move(v), std::move(name)});
}
Gadget apply(Gadget l, Gadget r) {
  return node({GadgetNode::Kind::Apply, std::move(l), std::move(r), {}, ""});
}

std::size_t hole_count(const Gadget& g) {
  if (g->kind == GadgetNode::Kind::Hole) return 1;
  if (g->kind != GadgetNode::Kind::Apply) return 0;
  return hole_count(g->left) + hole_count(g->right);
}

std::string to_string(const Gadget& g) {
  if (g->kind != GadgetNode::Kind::Apply) return g->name;
  return "B(" + to_string(g->left) + "," + to_string(g->right) + ")";
}

Gadget parse_gadget(std::string_view text, const std::map<std::string, Gadget>& names) {
  ExprParser p{text, names};
  Gadget g = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing characters");
  return g;
}

GadgetSpec parse_gadget_file(const std::string& text) {
  GadgetSpec spec;
  std::map<std::string, Gadget> names;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = numeric::strip_comment(raw);
    if (line.empty()) continue;
    auto w = numeric::split_ws(line);
    try {
      if (w[0] == "let") {
        auto eq = line.find('=');
        if (w.size() < 4 || w[2] != "=" || eq == std::string::npos) throw ParseError("expected 'let NAME = expr'");
        names[w[1]] = parse_gadget(std::string_view(line).substr(eq + 1), names);
      } else if (w[0] == "vec") {
        if (w.size() < 3) throw ParseError("expected 'vec NAME c1 ... cn'");
        Vector v;
        for (std::size_t i = 2; i < w.size(); ++i) v.push_back(numeric::parse_number(w[i], nullptr));
        names[w[1]] = fixed(w[1], std::move(v));
      } else if (w[0] == "size") {
        if (w.size() != 2) throw ParseError("expected 'size N'");
        spec.size = std::stoul(w[1]);
        if (*spec.size == 0) throw ParseError("size must be positive");
      } else {
        if (spec.expr) throw ParseError("more than one gadget expression");
        spec.expr = parse_gadget(line, names);
      }
    } catch (const ParseError& e) {
      if (e.line()) throw;
      throw ParseError(e.what(), line_no);
    } catch (const std::logic_error&) {
      throw ParseError("malformed number", line_no);
    }
  }
  if (!spec.expr) throw ParseError("no gadget expression");
  return spec;
}

GadgetSpec load_gadget(const std::string& path) { return parse_gadget_file(bilinear::read_file(path)); }

Vector eval_gadget(const bilinear::BilinearSystem& s, const Gadget& g) {
  Evaluator e{s, nullptr, {}};
  return e.run(*g);
}

Vector eval_gadget(const bilinear::BilinearSystem& s, const Gadget& g, const Vector& fill) {
  geometry::check_dims(fill, s.v0(), "hole value");
  Evaluator e{s, &fill, {}};
  return e.run(*g);
}

Matrix transfer_matrix(const bilinear::BilinearSystem& s, const Gadget& g) {
  const std::size_t holes = hole_count(g);
  if (holes != 1) throw MultipleHoles("a transfer matrix needs exactly one hole, found " + std::to_string(holes));
  const std::size_t n = s.dim();
  Matrix m(n, std::vector<AlgebraicNumber>(n));
  Evaluator e{s, nullptr, {}};
  for (std::size_t c = 0; c < n; ++c) {
    Vector unit(n);
    unit[c] = 1;
    e.fill = &unit;
    Vector col = e.run(*g);
    for (std::size_t r = 0; r < n; ++r) m[r][c] = col[r];
  }
  return m;
}

Vector multiply(const Matrix& m, const Vector& v) {
  Vector out;
  for (const auto& row : m) out.push_back(geometry::dot(row, v));
  return out;
}

}  // namespace growth::spectral
