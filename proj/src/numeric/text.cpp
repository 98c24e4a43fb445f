#include "growth/numeric/text.hpp"

#include <cctype>

#include "growth/error.hpp"

namespace growth::numeric {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

std::string strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return trim(line.substr(0, hash));
}

AlgebraicNumber parse_number(std::string_view text, const FieldPtr& field) {
  std::string s = trim(text);
  if (s.empty()) throw ParseError("empty number");
  if (s.rfind("poly(", 0) == 0) {
    if (s.back() != ')') throw ParseError("unterminated poly(...) in '" + s + "'");
    Polynomial p = parse_polynomial(s.substr(5, s.size() - 6));
    if (p.degree() >= 1 && !field) throw ParseError("poly(...) needs a number field: '" + s + "'");
    return p.degree() < 1 ? AlgebraicNumber(p.coeff(0)) : AlgebraicNumber(field, p);
  }
  if (s.find('a') != std::string::npos) {
    Polynomial p = parse_polynomial(s, 'a');
    if (p.degree() >= 1 && !field) throw ParseError("'" + s + "' mentions a but no field is set");
    return p.degree() < 1 ? AlgebraicNumber(p.coeff(0)) : AlgebraicNumber(field, p);
  }
  return AlgebraicNumber(parse_rational(s));
}

FieldPtr parse_field(std::string_view text) {
  std::string s = trim(text);
  if (s == "Q") return nullptr;
  auto semi = s.find(';');
  if (semi == std::string::npos) throw ParseError("field header needs '; interval lo hi'");
  Polynomial p = parse_polynomial(s.substr(0, semi));
  auto words = split_ws(s.substr(semi + 1));
  if (words.size() != 3 || words[0] != "interval")
    throw ParseError("field header needs '; interval lo hi'");
  return NumberField::make(p, parse_rational(words[1]), parse_rational(words[2]));
}

std::string field_header(const FieldPtr& field) { return field ? field->header() : "Q"; }

}  // namespace growth::numeric
