#include "growth/geometry/vector.hpp"

#include "growth/error.hpp"

namespace growth::geometry {

void check_dims(const Vector& a, const Vector& b, const char* what) {
  if (a.size() != b.size())
    throw DimensionMismatch(std::string(what) + ": dimension " + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
}

AlgebraicNumber dot(const Vector& a, const Vector& b) {
  check_dims(a, b, "dot");
  AlgebraicNumber s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Vector scaled(const Vector& v, const AlgebraicNumber& k) {
  Vector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.is_zero() ? x : x * k);
  return r;
}

Vector add(const Vector& a, const Vector& b) {
  check_dims(a, b, "add");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

bool dominated_by(const Vector& a, const Vector& b) {
  check_dims(a, b, "domination");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i] && (b[i] - a[i]).sign() < 0) return false;
  return true;
}

bool nonnegative(const Vector& v) {
  for (const auto& x : v)
    if (x.sign() < 0) return false;
  return true;
}

bool repr_less(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (numeric::repr_less(a[i], b[i])) return true;
    if (numeric::repr_less(b[i], a[i])) return false;
  }
  return false;
}

std::string to_string(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += v[i].to_string();
  }
  return out;
}

numeric::FieldPtr field_of(const Vector& v) {
  numeric::FieldPtr f;
  AlgebraicNumber acc;
  for (const auto& x : v) {
    if (x.is_rational()) continue;
    f = numeric::common_field(acc, x);
    acc = x;
  }
  return f;
}

}  // namespace growth::geometry
