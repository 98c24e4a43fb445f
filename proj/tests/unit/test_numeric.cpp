#include <doctest.h>

#include <random>

#include "growth/error.hpp"
#include "growth/numeric/algebraic.hpp"
#include "growth/numeric/text.hpp"

using namespace growth;
using namespace growth::numeric;

namespace {

Polynomial poly(const char* s) { return parse_polynomial(s); }

FieldPtr field(const char* p, const Rational& lo, const Rational& hi) {
  return NumberField::make(poly(p), lo, hi);
}

AlgebraicNumber elem(const FieldPtr& f, const char* expr) { return parse_number(expr, f); }

AlgebraicNumber random_element(const FieldPtr& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c;
  for (int i = 0; i < f->degree(); ++i) c.push_back(frac(num(rng), den(rng)));
  return AlgebraicNumber(f, c);
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("6/4") == frac(3, 2));
  CHECK(parse_rational("-0.25") == frac(-1, 4));
  CHECK(parse_rational("1e-3") == frac(1, 1000));
  CHECK(to_string(frac(-3, 6)) == "-1/2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK(to_decimal(frac(-1, 3), 3) == "-0.334");
}

TEST_CASE("polynomial parsing and arithmetic") {
  Polynomial p = poly("x^3 - x - 1");
  CHECK(p.degree() == 3);
  CHECK(p == poly("-1,-1,0,1"));
  CHECK(p.to_string() == "x^3 - x - 1");
  CHECK(poly("2*x^2+1/3x").to_string() == "2*x^2 + 1/3*x");
  auto [q, r] = Polynomial::divmod(poly("x^4-1"), poly("x^2+1"));
  CHECK(q == poly("x^2-1"));
  CHECK(r.is_zero());
  CHECK(gcd(poly("x^2-1"), poly("x^2+2x+1")) == poly("x+1"));
  Bezout b = extended_gcd(poly("x^3-x-1"), poly("x^2"));
  CHECK(b.g == poly("1"));
  CHECK((b.s * poly("x^3-x-1") + b.t * poly("x^2")) == poly("1"));
  CHECK(square_free_part(poly("x^3-5x^2+7x-3")) == poly("x^2-4x+3"));
}

TEST_CASE("Sturm counts against a rational grid") {
  for (const char* s : {"x^3 - x - 1", "x^2 - 2", "x^4 - 5x^2 + 4", "x^5 - x", "x^2+1"}) {
    Polynomial p = poly(s);
    // distinct simple roots in these examples are separated by more than 1/8 and are
    // not grid points except for the integers, so count sign changes plus exact zeros
    int grid = 0;
    Rational prev_x = -10;
    int prev = p.sign_at(prev_x);
    for (int i = -79; i <= 80; ++i) {
      Rational x = frac(i, 8);
      int s2 = p.sign_at(x);
      if (s2 == 0) ++grid;
      else if (prev != 0 && s2 != prev) ++grid;
      prev = s2;
    }
    CHECK(SturmSequence(p).count_all_roots() == grid);
  }
}

TEST_CASE("field_make examples and errors") {
  auto sqrt2 = field("x^2 - 2", 1, 2);
  CHECK(sqrt2->degree() == 2);
  auto plastic = field("x^3 - x - 1", 1, 2);
  auto [lo, hi] = plastic->isolating_interval(frac(1, 100000));
  CHECK(lo <= frac(132472, 100000));
  CHECK(hi >= frac(132471, 100000));
  auto three = field("x - 3", 2, 4);
  CHECK(AlgebraicNumber::generator(three) == AlgebraicNumber(3));
  CHECK_THROWS_AS(field("x^2 - 2", 2, 3), NoRootIsolated);
  CHECK_THROWS_AS(field("x^3 - x", Rational(-2), Rational(2)), NoRootIsolated);
  // (x-1)^2 (x-3): sign change on (0,4) but the double root 1 lies inside
  CHECK_THROWS_AS(NumberField::make(poly("x^3-5x^2+7x-3"), 0, 4), NotSquareFree);
}

TEST_CASE("arith examples") {
  auto sqrt2 = field("x^2 - 2", 1, 2);
  auto a = AlgebraicNumber::generator(sqrt2);
  CHECK(a * a == AlgebraicNumber(2));

  auto plastic = field("x^3 - x - 1", 1, 2);
  auto b = AlgebraicNumber::generator(plastic);
  CHECK(b * b * b == b + AlgebraicNumber(1));

  auto cbrt = field("x^7 - 3", 1, 2);
  auto e = elem(cbrt, "1/3a^6");
  CHECK(e + e == elem(cbrt, "2/3a^6"));
  CHECK((e + e).to_string() == "poly(0,0,0,0,0,0,2/3)");

  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_NOTHROW(a + AlgebraicNumber(frac(1, 2)));
}

TEST_CASE("invert examples") {
  auto plastic = field("x^3 - x - 1", 1, 2);
  auto a = AlgebraicNumber::generator(plastic);
  CHECK(a.inverse() == a * a - AlgebraicNumber(1));
  CHECK(AlgebraicNumber(2).inverse() == AlgebraicNumber(frac(1, 2)));
  auto sqrt2 = field("x^2 - 2", 1, 2);
  auto s = AlgebraicNumber::generator(sqrt2);
  CHECK(s.inverse() == s.scaled(frac(1, 2)));
  CHECK_THROWS_AS(AlgebraicNumber().inverse(), DivisionByZero);

  // reducible: (x^2-2)(x-5), root sqrt2 on (1,2)
  auto red = field("x^3 - 5x^2 - 2x + 10", 1, 2);
  auto r = AlgebraicNumber::generator(red);
  CHECK_THROWS_AS((r * r - AlgebraicNumber(2)).inverse(), DivisionByZero);
  try {
    (r - AlgebraicNumber(5)).inverse();
    FAIL("expected NotInvertible");
  } catch (const NotInvertible& err) {
    CHECK(err.factor() == "-5,1");
  }
  // monomial fast path in a binomial field
  auto tpd = field("x^85 - 939524096", 1, 2);
  auto t = elem(tpd, "1/234881024a^80");
  CHECK(t * t.inverse() == AlgebraicNumber(1));
}

TEST_CASE("sign_of examples") {
  auto sqrt2 = field("x^2 - 2", 1, 2);
  CHECK((AlgebraicNumber::generator(sqrt2) - AlgebraicNumber(frac(3, 2))).sign() == -1);
  auto plastic = field("x^3 - x - 1", 1, 2);
  auto a = AlgebraicNumber::generator(plastic);
  // build a^3 - a - 1 without reduction short-cuts: it reduces to zero
  CHECK((a.pow(3) - a - AlgebraicNumber(1)).sign() == 0);
  auto irr = field("x^9 - 48", 1, 2);
  CHECK((AlgebraicNumber(frac(14, 9)) - AlgebraicNumber::generator(irr)).sign() == 1);

  // reducible field: the zero test must go through gcd, not refinement
  auto red = field("x^3 - 5x^2 - 2x + 10", 1, 2);
  auto r = AlgebraicNumber::generator(red);
  CHECK((r * r - AlgebraicNumber(2)).sign() == 0);
  CHECK(!(r * r - AlgebraicNumber(2)).is_zero());
}

TEST_CASE("decimal_interval examples") {
  auto tpd = field("x^85 - 939524096", 1, 2);
  auto a = AlgebraicNumber::generator(tpd);
  auto [lo, hi] = a.decimal_interval(frac(1, 1000000));
  CHECK(hi - lo <= frac(1, 1000000));
  // independent check: lo^85 <= 2^27*7 <= hi^85
  CHECK(pow(lo, 85) <= Rational(939524096));
  CHECK(pow(hi, 85) >= Rational(939524096));
  // a finer bracket rounds to the quoted 1.275157 at both ends
  auto [flo, fhi] = a.decimal_interval(frac(1, 1000000000));
  CHECK(to_decimal(flo + frac(1, 2000000), 6) == "1.275157");
  CHECK(to_decimal(fhi + frac(1, 2000000), 6) == "1.275157");

  auto half = AlgebraicNumber(frac(1, 2)).decimal_interval(frac(1, 10));
  CHECK(half.first == frac(1, 2));
  CHECK(half.second == frac(1, 2));

  auto m4 = field("x^9 - 13", 1, 2);
  auto [l4, h4] = AlgebraicNumber::generator(m4).decimal_interval(frac(1, 1000000));
  CHECK(pow(l4, 9) <= 13);
  CHECK(pow(h4, 9) >= 13);
  CHECK(l4 <= frac(1329755, 1000000));
  CHECK(h4 >= frac(1329754, 1000000));
}

TEST_CASE("field axioms and sign consistency on random elements") {
  std::mt19937 rng(7);
  for (const char* p : {"x^3 - x - 1", "x^4 - x^3 - 1", "x^14 - 11x^7 + 9"}) {
    auto f = field(p, 1, 2);
    for (int round = 0; round < 12; ++round) {
      auto a = random_element(f, rng), b = random_element(f, rng), c = random_element(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inverse() == AlgebraicNumber(1));
      CHECK(a.sign() == -(-a).sign());
      CHECK((a * a).sign() == (a.is_zero() ? 0 : 1));
    }
  }
}

TEST_CASE("decimal brackets shrink and contain the value") {
  auto f = field("x^4 - x^3 - 1", 1, 2);
  auto a = AlgebraicNumber::generator(f) * AlgebraicNumber::generator(f) - AlgebraicNumber(frac(1, 3));
  Rational width(1, 10);
  Rational prev_lo = -100, prev_hi = 100;
  for (int i = 0; i < 40; ++i, width /= 2) {
    auto [lo, hi] = a.decimal_interval(width);
    CHECK(hi - lo <= width);
    CHECK((a - AlgebraicNumber(lo)).sign() >= 0);
    CHECK((AlgebraicNumber(hi) - a).sign() >= 0);
    CHECK(hi - lo <= prev_hi - prev_lo);
    prev_lo = lo;
    prev_hi = hi;
  }
}

TEST_CASE("number text round trip") {
  auto f = parse_field("-11,0,0,0,0,0,0,1 ; interval 1 2");
  (void)f;
  auto g = parse_field("x^14 - 11x^7 + 9 ; interval 1 2");
  auto c = parse_number("-1/3a^10+11/3a^3", g);
  CHECK(parse_number(c.to_string(), g) == c);
  CHECK(parse_field(field_header(g))->same_as(*g));
  CHECK(parse_field("Q") == nullptr);
  CHECK(parse_number("7/5", nullptr) == AlgebraicNumber(frac(7, 5)));
  CHECK_THROWS_AS(parse_number("poly(1,2)", nullptr), ParseError);
}
