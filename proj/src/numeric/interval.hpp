// Outward-rounded interval arithmetic on MPFR, used to decide signs and to bracket
// algebraic numbers. Every operation encloses the exact real result.
#ifndef GROWTH_SRC_NUMERIC_INTERVAL_HPP
#define GROWTH_SRC_NUMERIC_INTERVAL_HPP

#include <mpfr.h>

#include <vector>

#include "growth/numeric/rational.hpp"

namespace growth::numeric::detail {

class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~Real() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

struct Interval {
  Real lo, hi;
  explicit Interval(mpfr_prec_t prec) : lo(prec), hi(prec) {}

  static Interval of(const Rational& a, const Rational& b, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo.get(), a.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi.get(), b.get_mpq_t(), MPFR_RNDU);
    return r;
  }

  int sign() const {
    if (mpfr_sgn(lo.get()) > 0) return 1;
    if (mpfr_sgn(hi.get()) < 0) return -1;
    return 0;  // contains zero: undecided
  }

  Rational lower() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), lo.get());
    return q;
  }
  Rational upper() const {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), hi.get());
    return q;
  }
};

/// r := r * x + [c, c], outward rounded.
inline void horner_step(Interval& r, const Interval& x, const Rational& c, Real& t1, Real& t2,
                        Real& t3, Real& t4) {
  mpfr_mul(t1.get(), r.lo.get(), x.lo.get(), MPFR_RNDD);
  mpfr_mul(t2.get(), r.lo.get(), x.hi.get(), MPFR_RNDD);
  mpfr_mul(t3.get(), r.hi.get(), x.lo.get(), MPFR_RNDD);
  mpfr_mul(t4.get(), r.hi.get(), x.hi.get(), MPFR_RNDD);
  mpfr_min(t1.get(), t1.get(), t2.get(), MPFR_RNDD);
  mpfr_min(t3.get(), t3.get(), t4.get(), MPFR_RNDD);
  mpfr_min(t1.get(), t1.get(), t3.get(), MPFR_RNDD);

  mpfr_mul(t2.get(), r.lo.get(), x.lo.get(), MPFR_RNDU);
  mpfr_mul(t3.get(), r.lo.get(), x.hi.get(), MPFR_RNDU);
  mpfr_max(t2.get(), t2.get(), t3.get(), MPFR_RNDU);
  mpfr_mul(t3.get(), r.hi.get(), x.lo.get(), MPFR_RNDU);
  mpfr_mul(t4.get(), r.hi.get(), x.hi.get(), MPFR_RNDU);
  mpfr_max(t3.get(), t3.get(), t4.get(), MPFR_RNDU);
  mpfr_max(t2.get(), t2.get(), t3.get(), MPFR_RNDU);

  if (sgn(c) == 0) {
    mpfr_set(r.lo.get(), t1.get(), MPFR_RNDD);
    mpfr_set(r.hi.get(), t2.get(), MPFR_RNDU);
    return;
  }
  mpfr_set_q(t3.get(), c.get_mpq_t(), MPFR_RNDD);
  mpfr_add(r.lo.get(), t1.get(), t3.get(), MPFR_RNDD);
  mpfr_set_q(t4.get(), c.get_mpq_t(), MPFR_RNDU);
  mpfr_add(r.hi.get(), t2.get(), t4.get(), MPFR_RNDU);
}

/// Encloses sum c_i x^i for x in [x.lo, x.hi].
inline Interval eval(const std::vector<Rational>& coeffs, const Interval& x, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_zero(r.lo.get(), 1);
  mpfr_set_zero(r.hi.get(), 1);
  Real t1(prec), t2(prec), t3(prec), t4(prec);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) horner_step(r, x, *it, t1, t2, t3, t4);
  return r;
}

}  // namespace growth::numeric::detail

#endif  // GROWTH_SRC_NUMERIC_INTERVAL_HPP
