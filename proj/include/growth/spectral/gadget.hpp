#ifndef GROWTH_SPECTRAL_GADGET_HPP
#define GROWTH_SPECTRAL_GADGET_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "growth/bilinear/system.hpp"

namespace growth::spectral {

using bilinear::AlgebraicNumber;
using bilinear::Vector;
using Matrix = std::vector<std::vector<AlgebraicNumber>>;

struct GadgetNode;
using Gadget = std::shared_ptr<const GadgetNode>;

/// Expression over B, V0, fixed vectors and a single recursion hole.
struct GadgetNode {
  enum class Kind { V0, Hole, Fixed, Apply } kind;
  Gadget left, right;  // Apply
  Vector value;        // Fixed
  std::string name;    // Fixed: its name, for printing
};

Gadget v0_leaf();
Gadget hole();
Gadget fixed(std::string name, Vector v);
Gadget apply(Gadget l, Gadget r);

std::size_t hole_count(const Gadget& g);
std::string to_string(const Gadget& g);

/// A gadget file: `let NAME = expr`, `vec NAME c1 ... cn`, `size N`, and one bare
/// expression line such as `B(B(V0,HOLE),V0)`. `#` starts a comment.
struct GadgetSpec {
  Gadget expr;
  std::optional<unsigned long> size;  // vertices consumed per iteration, if stated
};

/// Parses one expression; `names` resolves identifiers. Throws ParseError.
Gadget parse_gadget(std::string_view text, const std::map<std::string, Gadget>& names = {});
GadgetSpec parse_gadget_file(const std::string& text);
GadgetSpec load_gadget(const std::string& path);

/// Folds apply over a hole-free gadget. Throws MultipleHoles if a hole is present.
Vector eval_gadget(const bilinear::BilinearSystem& s, const Gadget& g);
/// Evaluation with the hole replaced by `fill`.
Vector eval_gadget(const bilinear::BilinearSystem& s, const Gadget& g, const Vector& fill);

/// M with M e_i = g(e_i). Throws MultipleHoles unless exactly one hole occurs.
Matrix transfer_matrix(const bilinear::BilinearSystem& s, const Gadget& g);

Vector multiply(const Matrix& m, const Vector& v);

}  // namespace growth::spectral

#endif  // GROWTH_SPECTRAL_GADGET_HPP
