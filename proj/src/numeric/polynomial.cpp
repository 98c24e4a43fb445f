#include "growth/numeric/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "growth/error.hpp"

namespace growth::numeric {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational Polynomial::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r *= x;
    r += *it;
  }
  return r;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / lead();
  return scaled(inv);
}

Polynomial Polynomial::compose_power(std::size_t s) const {
  if (is_zero() || s == 1) return *this;
  std::vector<Rational> v(static_cast<std::size_t>(degree()) * s + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * s] = c_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::strip_zero_roots() const {
  std::size_t k = 0;
  while (k < c_.size() && sgn(c_[k]) == 0) ++k;
  return Polynomial(std::vector<Rational>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      v[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial Polynomial::scaled(const Rational& k) const {
  if (sgn(k) == 0) return {};
  Polynomial r = *this;
  for (auto& c : r.c_) c *= k;
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& n, const Polynomial& d) {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (n.degree() < d.degree()) return {Polynomial(), n};
  std::vector<Rational> rem = n.c_;
  std::vector<Rational> quo(n.c_.size() - d.c_.size() + 1);
  const Rational inv_lead = 1 / d.lead();
  const std::size_t dd = d.c_.size() - 1;
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (sgn(rem[i]) == 0) continue;
    Rational q = rem[i] * inv_lead;
    quo[i - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) {
      if (sgn(d.c_[j]) == 0) continue;
      rem[i - dd + j] -= q * d.c_[j];
    }
  }
  rem.resize(dd);
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    bool unit = a == 1;
    if (i == 0 || !unit) out += numeric::to_string(a);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::string Polynomial::to_coeff_list() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += numeric::to_string(c_[i]);
  }
  return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Bezout extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = Polynomial::divmod(r0, r1);
    Polynomial s2 = s0 - q * s1;
    Polynomial t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {};
  Rational inv = 1 / r0.lead();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  Polynomial g = gcd(p, p.derivative());
  return (p / g).monic();
}

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) return;
  chain_.push_back(p.monic());
  Polynomial d = p.derivative();
  if (d.is_zero()) return;
  chain_.push_back(d.monic());
  while (true) {
    Polynomial r = chain_[chain_.size() - 2] % chain_.back();
    if (r.is_zero()) break;
    // positive rescaling preserves sign patterns
    Rational k = abs(r.lead());
    chain_.push_back((-r).scaled(1 / k));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0, last = 0;
  for (const auto& p : chain_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  if (hi <= lo) return 0;
  return variations(lo) - variations(hi);
}

int SturmSequence::count_all_roots() const {
  if (chain_.empty()) return 0;
  Rational b = cauchy_bound(chain_.front());
  return count_roots(-b, b);
}

Rational cauchy_bound(const Polynomial& p) {
  Rational m = 0;
  if (p.degree() <= 0) return 1;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeffs()[static_cast<std::size_t>(i)] / p.lead());
    if (r > m) m = r;
  }
  return m + 1;
}

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, char var) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty polynomial");
  if (s.find(var) == std::string::npos) {
    // coefficient list, low-to-high
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = s.find(',', start);
      coeffs.push_back(parse_rational(s.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return Polynomial(std::move(coeffs));
  }
  std::vector<Rational> coeffs;
  std::size_t i = 0;
  while (i < s.size()) {
    int term_sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') term_sign = -term_sign;
      ++i;
    }
    std::size_t start = i;
    while (i < s.size() && s[i] != var && s[i] != '+' && s[i] != '-') ++i;
    std::string coeff_text = s.substr(start, i - start);
    if (!coeff_text.empty() && coeff_text.back() == '*') coeff_text.pop_back();
    Rational c = coeff_text.empty() ? Rational(1) : parse_rational(coeff_text);
    std::size_t power = 0;
    if (i < s.size() && s[i] == var) {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t pstart = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (pstart == i) throw ParseError("missing exponent in '" + text + "'");
        power = std::stoul(s.substr(pstart, i - pstart));
      }
    } else if (coeff_text.empty()) {
      throw ParseError("dangling sign in '" + text + "'");
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += term_sign * c;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace growth::numeric
