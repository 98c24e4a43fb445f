#include "growth/numeric/number_field.hpp"

#include "growth/error.hpp"

namespace growth::numeric {

NumberField::NumberField(Polynomial p, Rational lo, Rational hi)
    : poly_(std::move(p)), modulus_(poly_.monic()), lo_(std::move(lo)), hi_(std::move(hi)) {
  sign_at_lo_ = poly_.sign_at(lo_);
  cur_lo_ = lo_;
  cur_hi_ = hi_;
  const auto& c = modulus_.coeffs();
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (sgn(c[i]) != 0) tail_.emplace_back(i, c[i]);
}

FieldPtr NumberField::make_isolated(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.degree() < 1) throw NoRootIsolated("defining polynomial must be nonconstant");
  if (!(lo < hi)) throw NoRootIsolated("isolating interval must satisfy lo < hi");
  if (p.sign_at(lo) * p.sign_at(hi) >= 0)
    throw NoRootIsolated("P(lo)*P(hi) >= 0 for " + p.to_string() + " on (" + to_string(lo) + ", " +
                         to_string(hi) + ")");
  return FieldPtr(new NumberField(p, lo, hi));
}

FieldPtr NumberField::make(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.degree() < 1) throw NoRootIsolated("defining polynomial must be nonconstant");
  if (!(lo < hi)) throw NoRootIsolated("isolating interval must satisfy lo < hi");
  if (p.sign_at(lo) * p.sign_at(hi) >= 0)
    throw NoRootIsolated("P(lo)*P(hi) >= 0 for " + p.to_string() + " on (" + to_string(lo) + ", " +
                         to_string(hi) + ")");
  Polynomial g = gcd(p, p.derivative());
  if (g.degree() >= 1 && SturmSequence(g).count_roots(lo, hi) > 0)
    throw NotSquareFree(p.to_string() + " has a repeated root in (" + to_string(lo) + ", " +
                        to_string(hi) + ")");
  int roots = SturmSequence(p).count_roots(lo, hi);
  if (roots != 1)
    throw NoRootIsolated(p.to_string() + " has " + std::to_string(roots) + " real roots in (" +
                         to_string(lo) + ", " + to_string(hi) + ")");
  return FieldPtr(new NumberField(p, lo, hi));
}

std::pair<Rational, Rational> NumberField::isolating_interval(const Rational& width) const {
  std::lock_guard<std::mutex> lock(mutex_);
  while (cur_hi_ - cur_lo_ > width) {
    Rational mid = (cur_lo_ + cur_hi_) / 2;
    int s = modulus_.sign_at(mid);
    if (s == 0) {
      cur_lo_ = cur_hi_ = mid;
      break;
    }
    // the monic modulus may differ from poly_ by a negative factor
    if (s * sgn(poly_.lead()) == sign_at_lo_)
      cur_lo_ = mid;
    else
      cur_hi_ = mid;
  }
  return {cur_lo_, cur_hi_};
}

std::pair<Rational, Rational> NumberField::current_interval() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return {cur_lo_, cur_hi_};
}

bool NumberField::same_as(const NumberField& other) const {
  if (this == &other) return true;
  if (!(modulus_ == other.modulus_)) return false;
  Rational lo = lo_ > other.lo_ ? lo_ : other.lo_;
  Rational hi = hi_ < other.hi_ ? hi_ : other.hi_;
  if (!(lo < hi)) return false;
  // both intervals hold exactly one simple root; they coincide iff it lies in the overlap
  int a = modulus_.sign_at(lo), b = modulus_.sign_at(hi);
  if (a == 0 || b == 0) return false;
  return a != b;
}

std::string NumberField::header() const {
  return poly_.to_coeff_list() + " ; interval " + to_string(lo_) + " " + to_string(hi_);
}

}  // namespace growth::numeric
