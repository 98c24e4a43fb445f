#include "growth/spectral/spectral.hpp"

#include <mpfr.h>

#include "growth/error.hpp"

namespace growth::spectral {

namespace {

std::vector<std::vector<Rational>> rational_entries(const Matrix& m) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : m) {
    if (row.size() != m.size()) throw DimensionMismatch("matrix is not square");
    std::vector<Rational> r;
    for (const auto& x : row) {
      if (!x.is_rational()) throw Error("characteristic polynomial needs rational entries");
      r.push_back(x.rational_value());
    }
    out.push_back(std::move(r));
  }
  return out;
}

Rational pow2(long bits) {
  Rational r = 1;
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  return r;
}

// x^(1/n) rounded in direction `rnd` at `prec` bits, as a rational.
Rational root_rounded(const Rational& x, unsigned long n, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  mpfr_t v;
  mpfr_init2(v, prec);
  mpfr_set_q(v, x.get_mpq_t(), rnd);
  mpfr_rootn_ui(v, v, n, rnd);
  Rational q;
  mpfr_get_q(q.get_mpq_t(), v);
  mpfr_clear(v);
  return q;
}

}  // namespace

Polynomial char_poly(const Matrix& matrix) {
  auto m = rational_entries(matrix);
  const std::size_t n = m.size();
  if (n == 0) return Polynomial{1};
  // c holds det(xI - A_k) for the leading k x k block, highest power first
  std::vector<Rational> c{1, -m[0][0]};
  for (std::size_t k = 1; k < n; ++k) {
    // q = (1, -a, -R S, -R A S, ..., -R A^(k-1) S)
    std::vector<Rational> q{1, -m[k][k]};
    std::vector<Rational> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = m[i][k];
    for (std::size_t p = 0; p < k; ++p) {
      Rational rv = 0;
      for (std::size_t i = 0; i < k; ++i) rv += m[k][i] * v[i];
      q.push_back(-rv);
      std::vector<Rational> next(k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) next[i] += m[i][j] * v[j];
      v = std::move(next);
    }
    std::vector<Rational> nc(k + 2);
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, k); ++j) nc[i] += q[i - j] * c[j];
    c = std::move(nc);
  }
  std::vector<Rational> low(c.rbegin(), c.rend());
  Polynomial p(std::move(low));
  return n % 2 ? -p : p;
}

RootIsolation largest_real_root(const Polynomial& p, const Rational& width) {
  if (p.degree() < 1) throw NoRealRoot("constant polynomial");
  Polynomial q = square_free_part(p);
  numeric::SturmSequence sturm(q);
  Rational hi = numeric::cauchy_bound(q), lo = -hi;
  if (sturm.count_roots(lo, hi) == 0) throw NoRealRoot("no real root: " + p.to_string());
  auto rational_root = [](const Rational& r) {
    auto f = numeric::NumberField::make(Polynomial{-r, 1}, r - 1, r + 1);
    return RootIsolation{f, r, r};
  };
  // keep (lo, hi] holding the largest root and nothing else, then shrink it to
  // `width` with both ends off the root
  while (sturm.count_roots(lo, hi) > 1 || q.sign_at(lo) == 0 || hi - lo > width) {
    if (q.sign_at(hi) == 0) return rational_root(hi);
    Rational mid = (lo + hi) / 2;
    if (q.sign_at(mid) == 0 && sturm.count_roots(mid, hi) == 0) return rational_root(mid);
    if (sturm.count_roots(mid, hi) >= 1) lo = mid;
    else hi = mid;
  }
  if (q.sign_at(hi) == 0) return rational_root(hi);
  return {numeric::NumberField::make_isolated(q, lo, hi), lo, hi};
}

bool is_primitive(const Matrix& m) {
  const std::size_t n = m.size();
  using Pattern = std::vector<std::vector<bool>>;
  Pattern p(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p[i][j] = !m[i][j].is_zero();
  auto mul = [n](const Pattern& a, const Pattern& b) {
    Pattern r(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (a[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (b[k][j]) r[i][j] = true;
    return r;
  };
  // primitive iff the power (n-1)^2 + 1 is positive
  std::size_t e = (n - 1) * (n - 1) + 1;
  Pattern result = p, base = p;
  for (--e; e; e >>= 1) {
    if (e & 1) result = mul(result, base);
    if (e > 1) base = mul(base, base);
  }
  for (const auto& row : result)
    for (bool x : row)
      if (!x) return false;
  return true;
}

Bracketer bracket_of(const numeric::AlgebraicNumber& x) {
  return [x](const Rational& w) { return x.decimal_interval(w); };
}

std::pair<Rational, Rational> LowerBound::beta_interval(const Rational& width) const {
  for (long bits = 64;; bits *= 2) {
    auto [lo, hi] = lambda_field->isolating_interval(width * pow2(bits));
    if (sgn(lo) < 0) lo = 0;
    const auto prec = static_cast<mpfr_prec_t>(2 * bits + 64 + mpz_sizeinbase(width.get_den_mpz_t(), 2));
    Rational a = root_rounded(lo, size, prec, MPFR_RNDD), b = root_rounded(hi, size, prec, MPFR_RNDU);
    if (b - a <= width) return {a, b};
  }
}

Bracketer LowerBound::beta() const {
  LowerBound copy = *this;
  return [copy](const Rational& w) { return copy.beta_interval(w); };
}

numeric::AlgebraicNumber LowerBound::beta_exact() const {
  Polynomial q = square_free_part(lambda_field->polynomial()).compose_power(size);
  auto [lo, hi] = lambda_field->isolating_interval(pow2(64));
  if (sgn(lo) <= 0) throw Error("beta needs a positive lambda");
  Rational a = root_rounded(lo, size, 256, MPFR_RNDD), b = root_rounded(hi, size, 256, MPFR_RNDU);
  // lambda is the only root of p in [lo, hi], so x^s maps (a, b) onto a superset
  // holding exactly one root of p(x^s) on the positive axis
  auto f = q.degree() <= 64 ? numeric::NumberField::make(q, a, b) : numeric::NumberField::make_isolated(q, a, b);
  return numeric::AlgebraicNumber::generator(f);
}

LowerBound lower_bound_from_matrix(const Matrix& m, unsigned long gadget_size) {
  if (gadget_size == 0) throw Error("gadget size must be positive");
  for (const auto& row : m)
    for (const auto& x : row)
      if (x.sign() < 0) throw NegativeEntry("transfer matrix has a negative entry");
  LowerBound r;
  r.char_poly = char_poly(m);
  r.lambda_field = largest_real_root(r.char_poly, pow2(20)).field;
  r.size = gadget_size;
  r.primitive = is_primitive(m);
  return r;
}

LowerBound lower_bound(const bilinear::BilinearSystem& s, const Gadget& g, unsigned long gadget_size) {
  return lower_bound_from_matrix(transfer_matrix(s, g), gadget_size);
}

LowerBound lower_bound_from_count(const Rational& count, unsigned long size) {
  Matrix m{{numeric::AlgebraicNumber(count)}};
  return lower_bound_from_matrix(m, size);
}

int compare_separated(const Bracketer& x, const Bracketer& y, long max_bits) {
  for (long bits = 32; bits <= max_bits; bits *= 2) {
    Rational w = pow2(bits);
    auto [xl, xh] = x(w);
    auto [yl, yh] = y(w);
    if (xl > yh) return 1;
    if (xh < yl) return -1;
  }
  return 0;
}

std::string rounded(const std::pair<Rational, Rational>& b, int digits) {
  Rational half = 1 / (2 * numeric::pow(Rational(10), static_cast<unsigned long>(digits)));
  std::string lo = numeric::to_decimal(b.first + half, digits), hi = numeric::to_decimal(b.second + half, digits);
  return lo == hi ? lo : "";
}

}  // namespace growth::spectral
