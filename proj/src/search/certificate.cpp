#include "growth/search/certificate.hpp"

#include <sstream>

#include "growth/bilinear/system_io.hpp"
#include "growth/error.hpp"
#include "growth/numeric/text.hpp"

namespace growth::search {

namespace {

std::string rest_of(const std::string& line, const std::string& keyword) {
  auto at = line.find(keyword);
  return numeric::strip_comment(line.substr(at + keyword.size()));
}

}  // namespace

Certificate parse_certificate(const std::string& text) {
  Certificate c;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0, dim = 0;
  bool have_field = false, have_alpha = false;
  std::optional<std::size_t> declared_count;
  auto vector_of = [&](const std::vector<std::string>& w) {
    Vector v;
    for (std::size_t i = 1; i < w.size(); ++i) v.push_back(numeric::parse_number(w[i], c.field));
    if (v.empty()) throw ParseError("empty vector", line_no);
    if (dim && v.size() != dim)
      throw ParseError("vector has " + std::to_string(v.size()) + " entries, expected " + std::to_string(dim), line_no);
    dim = v.size();
    return v;
  };
  while (std::getline(in, raw)) {
    ++line_no;
    auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (raw[first] == '#') {
      if (c.title.empty() && !have_field) c.title = numeric::strip_comment(raw.substr(first + 1));
      continue;
    }
    auto w = numeric::split_ws(numeric::strip_comment(raw));
    if (w.empty()) continue;
    try {
      if (w[0] == "field:" || w[0] == "field") {
        if (have_field) throw ParseError("field declared twice", line_no);
        c.field = numeric::parse_field(rest_of(raw, w[0]));
        have_field = true;
        continue;
      }
      if (!have_field) throw ParseError("'field:' header must come first", line_no);
      if (w[0] == "alpha") {
        if (w.size() != 2) throw ParseError("expected 'alpha x'", line_no);
        c.alpha = numeric::parse_number(w[1], c.field);
        have_alpha = true;
      } else if (w[0] == "states") {
        c.state_names.assign(w.begin() + 1, w.end());
      } else if (w[0] == "seed") {
        c.seeds.push_back(vector_of(w));
      } else if (w[0] == "vec") {
        c.vectors.push_back(vector_of(w));
      } else if (w[0] == "C") {
        if (w.size() != 2) throw ParseError("expected 'C x'", line_no);
        c.stated_c = numeric::parse_number(w[1], c.field);
      } else if (w[0] == "vectors") {
        if (w.size() != 2) throw ParseError("expected 'vectors N'", line_no);
        declared_count = std::stoul(w[1]);
      } else {
        throw ParseError("unknown keyword '" + w[0] + "'", line_no);
      }
    } catch (const ParseError& e) {
      if (e.line()) throw;
      throw ParseError(e.what(), line_no);
    } catch (const std::logic_error&) {
      throw ParseError("malformed number", line_no);
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!have_field) throw ParseError("missing 'field:' header");
  if (!have_alpha) throw ParseError("missing 'alpha'");
  if (c.vectors.empty()) throw ParseError("no 'vec' lines");
  if (declared_count && *declared_count != c.vectors.size())
    throw ParseError("file declares " + std::to_string(*declared_count) + " vectors but has " +
                     std::to_string(c.vectors.size()));
  if (!c.state_names.empty() && c.state_names.size() != dim)
    throw ParseError("states line does not match the vector dimension");
  return c;
}

Certificate load_certificate(const std::string& path) { return parse_certificate(bilinear::read_file(path)); }

std::string format_certificate(const Certificate& c, const Vector* f) {
  std::ostringstream out;
  if (!c.title.empty()) out << "# " << c.title << "\n";
  out << "field: " << numeric::field_header(c.field) << "\n";
  out << "alpha " << c.alpha.to_string() << "\n";
  if (!c.state_names.empty()) {
    out << "states";
    for (const auto& s : c.state_names) out << ' ' << s;
    out << "\n";
  }
  for (const auto& s : c.seeds) out << "seed " << geometry::to_string(s) << "\n";
  out << "vectors " << c.vectors.size() << "\n";
  for (const auto& v : c.vectors) out << "vec " << geometry::to_string(v) << "\n";
  if (f) {
    AlgebraicNumber best;
    for (std::size_t i = 0; i < c.vectors.size(); ++i) {
      AlgebraicNumber x = geometry::dot(*f, c.vectors[i]);
      if (i == 0 || x > best) best = x;
    }
    out << "C " << best.to_string() << "\n";
  }
  return out.str();
}

}  // namespace growth::search
