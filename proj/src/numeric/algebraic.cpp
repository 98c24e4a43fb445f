#include "growth/numeric/algebraic.hpp"

#include <algorithm>

#include "growth/error.hpp"
#include "interval.hpp"

namespace growth::numeric {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

// Enclosure of p(root) using the field's current interval at `prec` bits.
detail::Interval enclose(const std::vector<Rational>& c, const Rational& lo, const Rational& hi,
                         mpfr_prec_t prec) {
  return detail::eval(c, detail::Interval::of(lo, hi, prec), prec);
}

// c = (result) / den with integer entries, den the lcm of the denominators.
std::vector<Integer> integral(const std::vector<Rational>& c, Integer& den) {
  den = 1;
  for (const auto& x : c)
    if (x.get_den() != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    mpz_divexact(out[i].get_mpz_t(), den.get_mpz_t(), c[i].get_den_mpz_t());
    out[i] *= c[i].get_num();
  }
  return out;
}

mpfr_prec_t precision_for(long bits) { return static_cast<mpfr_prec_t>(2 * bits + 128); }

}  // namespace

AlgebraicNumber::AlgebraicNumber(const Rational& r) {
  if (sgn(r) != 0) c_.push_back(r);
}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  reduce();
}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, const Polynomial& p)
    : AlgebraicNumber(std::move(field), p.coeffs()) {}

AlgebraicNumber AlgebraicNumber::generator(FieldPtr field) {
  return AlgebraicNumber(std::move(field), std::vector<Rational>{0, 1});
}

void AlgebraicNumber::reduce() {
  trim(c_);
  if (!field_) {
    if (c_.size() > 1) throw FieldMismatch("polynomial element without a field");
    return;
  }
  const auto d = static_cast<std::size_t>(field_->degree());
  if (c_.size() <= d) return;
  // a^d = -sum(tail); fold the top coefficients down
  const auto& tail = field_->tail();
  for (std::size_t i = c_.size(); i-- > d;) {
    if (sgn(c_[i]) == 0) continue;
    const Rational top = c_[i];
    c_[i] = 0;
    for (const auto& [j, t] : tail) c_[i - d + j] -= top * t;
  }
  c_.resize(d);
  trim(c_);
}

FieldPtr common_field(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational()) return b.field() ? b.field() : a.field();
  if (b.is_rational()) return a.field();
  if (!same_field(a.field(), b.field())) throw FieldMismatch("operands live in different number fields");
  return a.field();
}

AlgebraicNumber AlgebraicNumber::operator-() const {
  AlgebraicNumber r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  AlgebraicNumber r;
  r.field_ = common_field(a, b);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
  trim(r.c_);
  return r;
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a + (-b); }

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  AlgebraicNumber r;
  r.field_ = common_field(a, b);
  if (a.is_zero() || b.is_zero()) return r;
  if (a.c_.size() == 1 || b.c_.size() == 1) {
    AlgebraicNumber s = a.c_.size() == 1 ? b.scaled(a.c_[0]) : a.scaled(b.c_[0]);
    s.field_ = r.field_;
    return s;
  }
  // multiply over Z with common denominators: one gcd per output coefficient
  // instead of one per partial product
  Integer da, db;
  auto A = integral(a.c_, da), B = integral(b.c_, db);
  std::vector<Integer> p(A.size() + B.size() - 1);
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i] == 0) continue;
    for (std::size_t j = 0; j < B.size(); ++j)
      if (B[j] != 0) mpz_addmul(p[i + j].get_mpz_t(), A[i].get_mpz_t(), B[j].get_mpz_t());
  }
  const Integer den = da * db;
  const auto d = static_cast<std::size_t>(r.field_->degree());
  const auto& tail = r.field_->tail();
  bool integral_tail = true;
  for (const auto& [j, t] : tail) integral_tail = integral_tail && t.get_den() == 1;
  if (integral_tail && p.size() > d) {
    for (std::size_t i = p.size(); i-- > d;) {
      if (p[i] == 0) continue;
      for (const auto& [j, t] : tail) mpz_submul(p[i - d + j].get_mpz_t(), p[i].get_mpz_t(), t.get_num_mpz_t());
      p[i] = 0;
    }
    p.resize(d);
  }
  r.c_.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    mpq_set_num(r.c_[i].get_mpq_t(), p[i].get_mpz_t());
    mpq_set_den(r.c_[i].get_mpq_t(), den.get_mpz_t());
    r.c_[i].canonicalize();
  }
  r.reduce();
  return r;
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  common_field(a, b);
  if (b.is_rational()) {
    if (b.is_zero()) throw DivisionByZero("division by zero");
    return a.scaled(1 / b.c_[0]);
  }
  return a * b.inverse();
}

AlgebraicNumber AlgebraicNumber::scaled(const Rational& k) const {
  AlgebraicNumber r;
  r.field_ = field_;
  if (sgn(k) == 0) return r;
  r.c_ = c_;
  for (auto& c : r.c_) c *= k;
  return r;
}

AlgebraicNumber AlgebraicNumber::pow(unsigned long e) const {
  AlgebraicNumber result(Rational(1));
  result.field_ = field_;
  AlgebraicNumber base = *this;
  while (e) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (is_rational()) {
    AlgebraicNumber r(1 / c_[0]);
    r.field_ = field_;
    return r;
  }
  const auto d = static_cast<std::size_t>(field_->degree());
  const auto& tail = field_->tail();
  // monomial k*a^j in a^d = c: inverse is a^(d-j) / (k*c)
  std::size_t nonzero = 0, j = 0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) ++nonzero, j = i;
  if (nonzero == 1 && tail.size() == 1 && tail[0].first == 0) {
    const Rational c = -tail[0].second;
    std::vector<Rational> v(d - j + 1);
    v[d - j] = 1 / (c_[j] * c);
    return AlgebraicNumber(field_, std::move(v));
  }
  Bezout b = extended_gcd(polynomial(), field_->modulus());
  if (b.g.degree() > 0) {
    // g divides P, so it vanishes at the root iff it changes sign on the interval
    if (b.g.sign_at(field_->lower()) != b.g.sign_at(field_->upper()))
      throw DivisionByZero("inverse of an element that vanishes at the root");
    throw NotInvertible("element is a zero divisor modulo " + field_->polynomial().to_string(),
                        b.g.to_coeff_list());
  }
  return AlgebraicNumber(field_, b.s);
}

int AlgebraicNumber::sign() const {
  if (is_rational()) return is_zero() ? 0 : sgn(c_[0]);
  const Rational base = field_->upper() - field_->lower();
  auto refined = [&](long bits) {
    Rational width;
    mpq_div_2exp(width.get_mpq_t(), base.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
    return field_->isolating_interval(width);
  };
  // the first refinement is memoized in the field, so most queries stop here
  {
    auto [lo, hi] = refined(64);
    if (lo == hi) return sgn(polynomial().eval(lo));
    if (int s = enclose(c_, lo, hi, precision_for(64)).sign()) return s;
  }
  Polynomial g = gcd(polynomial(), field_->modulus());
  if (g.degree() > 0 && g.sign_at(field_->lower()) != g.sign_at(field_->upper())) return 0;
  for (long bits = 128;; bits *= 2) {
    auto [lo, hi] = refined(bits);
    if (lo == hi) return sgn(polynomial().eval(lo));
    if (int s = enclose(c_, lo, hi, precision_for(bits)).sign()) return s;
  }
}

std::pair<Rational, Rational> AlgebraicNumber::decimal_interval(const Rational& width) const {
  if (is_rational()) return {rational_value(), rational_value()};
  auto [lo, hi] = field_->current_interval();
  const Rational base = field_->upper() - field_->lower();
  for (long bits = 16;; bits *= 2) {
    if (lo == hi) {
      Rational v = polynomial().eval(lo);
      return {v, v};
    }
    // enough working bits to resolve both the root interval and the requested width
    long need = bits + static_cast<long>(mpz_sizeinbase(width.get_den_mpz_t(), 2));
    auto e = enclose(c_, lo, hi, precision_for(need));
    Rational l = e.lower(), h = e.upper();
    if (h - l <= width) return {l, h};
    Rational w = base;
    mpq_div_2exp(w.get_mpq_t(), base.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
    std::tie(lo, hi) = field_->isolating_interval(w);
  }
}

std::string AlgebraicNumber::to_string() const {
  if (is_rational()) return numeric::to_string(rational_value());
  std::string out = "poly(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += numeric::to_string(c_[i]);
  }
  return out + ")";
}

std::string AlgebraicNumber::to_expression(const std::string& var) const {
  return polynomial().to_string(var);
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.c_ != b.c_) return false;
  return a.is_rational() || same_field(a.field_, b.field_);
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (a.is_rational() && b.is_rational()) {
    int c = cmp(a.rational_value(), b.rational_value());
    return (c > 0) - (c < 0);
  }
  return (a - b).sign();
}

bool repr_less(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  if (x.size() != y.size()) return x.size() < y.size();
  for (std::size_t i = 0; i < x.size(); ++i) {
    int c = cmp(x[i], y[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace growth::numeric
