#include "growth/bilinear/system_io.hpp"

#include <fstream>
#include <sstream>

#include "growth/error.hpp"
#include "growth/numeric/text.hpp"

namespace growth::bilinear {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BilinearSystem parse_system(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0, dim = 0;
  std::optional<Vector> v0, f;
  std::vector<Term> terms;
  std::vector<std::string> names;
  auto numbers = [&](const std::vector<std::string>& w) {
    Vector v;
    for (std::size_t i = 1; i < w.size(); ++i) v.push_back(numeric::parse_number(w[i], nullptr));
    return v;
  };
  auto index = [&](const std::string& w) -> std::size_t {
    std::size_t pos = 0;
    unsigned long i = 0;
    try {
      i = std::stoul(w, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != w.size() || i < 1 || i > dim)
      throw ParseError("coordinate '" + w + "' not in 1.." + std::to_string(dim), line_no);
    return i - 1;
  };
  while (std::getline(in, raw)) {
    ++line_no;
    auto w = numeric::split_ws(numeric::strip_comment(raw));
    if (w.empty()) continue;
    try {
      if (w[0] == "dim") {
        if (w.size() != 2 || dim) throw ParseError("expected a single 'dim n'", line_no);
        dim = std::stoul(w[1]);
        if (dim == 0) throw ParseError("dim must be positive", line_no);
        continue;
      }
      if (!dim) throw ParseError("'dim' must come first", line_no);
      if (w[0] == "V0" || w[0] == "F") {
        Vector v = numbers(w);
        if (v.size() != dim)
          throw ParseError(w[0] + " needs " + std::to_string(dim) + " entries", line_no);
        (w[0] == "V0" ? v0 : f) = std::move(v);
      } else if (w[0] == "term") {
        if (w.size() != 4 && w.size() != 5) throw ParseError("expected 'term q q1 q2 [coeff]'", line_no);
        Rational c = w.size() == 5 ? numeric::parse_rational(w[4]) : Rational(1);
        if (sgn(c) < 0) throw ParseError("negative coefficient", line_no);
        terms.push_back({index(w[1]), index(w[2]), index(w[3]), c});
      } else if (w[0] == "states") {
        names.assign(w.begin() + 1, w.end());
        if (names.size() != dim) throw ParseError("states needs " + std::to_string(dim) + " names", line_no);
      } else {
        throw ParseError("unknown keyword '" + w[0] + "'", line_no);
      }
    } catch (const ParseError& e) {
      if (e.line()) throw;
      throw ParseError(e.what(), line_no);
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed number", line_no);
    } catch (const std::out_of_range&) {
      throw ParseError("number out of range", line_no);
    }
  }
  if (!dim) throw ParseError("missing 'dim'");
  if (!v0) throw ParseError("missing 'V0'");
  if (!f) throw ParseError("missing 'F'");
  try {
    return BilinearSystem(dim, std::move(terms), std::move(*v0), std::move(*f), std::move(names));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

BilinearSystem load_system(const std::string& path) { return parse_system(read_file(path)); }

std::string format_system(const BilinearSystem& s) {
  std::ostringstream out;
  out << "dim " << s.dim() << "\n";
  if (!s.state_names().empty()) {
    out << "states";
    for (const auto& n : s.state_names()) out << ' ' << n;
    out << "\n";
  }
  out << "V0 " << geometry::to_string(s.v0()) << "\n";
  out << "F " << geometry::to_string(s.f()) << "\n";
  for (const auto& t : s.terms()) {
    out << "term " << t.target + 1 << ' ' << t.left + 1 << ' ' << t.right + 1;
    if (t.coeff != 1) out << ' ' << numeric::to_string(t.coeff);
    out << "\n";
  }
  return out.str();
}

}  // namespace growth::bilinear
