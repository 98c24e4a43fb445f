#include "growth/search/verify.hpp"

#include <atomic>
#include <sstream>

#include "growth/error.hpp"
#include "growth/geometry/hull.hpp"
#include "growth/util/parallel.hpp"

namespace growth::search {

VerifyResult verify_certificate(const bilinear::BilinearSystem& s, const AlgebraicNumber& alpha,
                                const std::vector<Vector>& X, const VerifyOptions& opt) {
  if (X.empty()) throw Error("certificate has no vectors");
  for (const auto& x : X) {
    geometry::check_dims(x, s.v0(), "certificate vector");
    if (!geometry::nonnegative(x)) throw NegativeEntry("certificate vectors must be nonnegative");
    for (const auto& c : x) numeric::common_field(c, alpha);
  }
  VerifyResult r;
  Vector start = s.scale_initial(alpha);
  if (!geometry::member_dominated_hull(start, X)) {
    r.witness = start;
    return r;
  }
  const std::size_t m = X.size(), total = m * m;
  std::atomic<std::size_t> first_bad{total};
  std::vector<const Vector*> ptrs;
  for (const auto& x : X) ptrs.push_back(&x);
  util::parallel_for(total, opt.threads, [&](std::size_t p) {
    if (p > first_bad) return;
    Vector v = s.apply(X[p / m], X[p % m]);
    if (!geometry::member_dominated_hull(v, ptrs)) {
      std::size_t cur = first_bad;
      while (p < cur && !first_bad.compare_exchange_weak(cur, p)) {
      }
    }
  });
  if (first_bad < total) {
    const std::size_t p = first_bad;
    r.pair = std::make_pair(p / m, p % m);
    r.witness = s.apply(X[p / m], X[p % m]);
    return r;
  }
  r.valid = true;
  r.C = bilinear::max_f(s, X);
  return r;
}

VerifyResult verify_against(const bilinear::BilinearSystem& s, const Certificate& c, const VerifyOptions& opt) {
  const std::size_t dim = c.vectors.front().size();
  if (dim == s.dim()) return verify_certificate(s, c.alpha, c.vectors, opt);
  auto t = bilinear::trim(s);
  if (t.system.dim() != dim)
    throw DimensionMismatch("certificate dimension " + std::to_string(dim) + " matches neither the system (" +
                            std::to_string(s.dim()) + ") nor its trim (" + std::to_string(t.system.dim()) + ")");
  return verify_certificate(t.system, c.alpha, c.vectors, opt);
}

std::string bracket(const AlgebraicNumber& x, int digits) {
  numeric::Rational w = numeric::pow(numeric::Rational(10), static_cast<unsigned long>(digits));
  auto [lo, hi] = x.decimal_interval(1 / w);
  return "[" + numeric::to_decimal(lo, digits + 1) + ", " + numeric::to_decimal(hi, digits + 1) + "]";
}

std::string approx(const AlgebraicNumber& x, int digits) {
  numeric::Rational w = numeric::pow(numeric::Rational(10), static_cast<unsigned long>(digits + 3));
  auto [lo, hi] = x.decimal_interval(1 / w);
  numeric::Rational mid = (lo + hi) / 2;
  // to_decimal truncates toward -inf, so adding half a unit rounds
  numeric::Rational half = 1 / (2 * numeric::pow(numeric::Rational(10), static_cast<unsigned long>(digits)));
  return numeric::to_decimal(mid + half, digits);
}

std::string upper_bound_report(const AlgebraicNumber& C, const AlgebraicNumber& alpha,
                               const std::vector<unsigned long>& ns, int digits) {
  std::ostringstream out;
  out << "C = " << C.to_expression() << "\n";
  out << "alpha = " << alpha.to_expression() << "\n";
  out << "C ~ " << approx(C, digits) << "  in " << bracket(C, digits) << "\n";
  out << "alpha ~ " << approx(alpha, digits) << "  in " << bracket(alpha, digits) << "\n";
  out << "count(n) <= C * alpha^n for every n\n";
  for (unsigned long n : ns) {
    AlgebraicNumber b = C * alpha.pow(n);
    out << "n = " << n << ": bound = " << b.to_expression() << " ~ " << approx(b, digits) << "\n";
  }
  return out.str();
}

}  // namespace growth::search
