// Acceptance run: one PASS/FAIL line per criterion, sub-checks indented above it.
//
//   acceptance [--only N]... [--long] [--expect-fail N]...
//
// Exit status is 0 when the failing criteria are exactly the --expect-fail set.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "growth/automaton/automaton.hpp"
#include "growth/bilinear/system_io.hpp"
#include "growth/cli/alpha_spec.hpp"
#include "growth/cli/commands.hpp"
#include "growth/cli/fixtures.hpp"
#include "growth/error.hpp"
#include "growth/geometry/hull.hpp"
#include "growth/geometry/lp.hpp"
#include "growth/numeric/text.hpp"
#include "growth/oracle/oracle.hpp"
#include "growth/search/search.hpp"
#include "growth/search/verify.hpp"
#include "growth/spectral/spectral.hpp"

using namespace growth;
using numeric::AlgebraicNumber;
using numeric::frac;
using numeric::Rational;
using bilinear::Vector;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  bool ok = true;
  void check(bool pass, const std::string& what) {
    std::cout << "    " << (pass ? "ok   " : "FAIL ") << what << std::endl;
    ok = ok && pass;
  }
  // runs `body`, turning an exception into a failed sub-check
  template <class F>
  void guarded(const std::string& what, F body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, what + ": " + e.what());
    }
  }
};

bilinear::BilinearSystem system_of(const std::string& name) {
  return bilinear::load_system(cli::fixture(name).system_path());
}

search::Certificate certificate_of(const std::string& name) {
  return search::load_certificate(cli::fixture(name).certificate_path());
}

bool conv_equal(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  for (const auto& x : a)
    if (!geometry::member_dominated_hull(x, b)) return false;
  for (const auto& x : b)
    if (!geometry::member_dominated_hull(x, a)) return false;
  return true;
}

std::string seconds(Clock::time_point t0) {
  std::ostringstream s;
  s.precision(2);
  s << std::fixed << std::chrono::duration<double>(Clock::now() - t0).count() << "s";
  return s.str();
}

Rational ten_to_minus(unsigned long e) { return 1 / numeric::pow(Rational(10), e); }

// 1 -----------------------------------------------------------------------

void certificates(Criterion& c) {
  const std::vector<std::pair<const char*, const char*>> cases = {
      {"indep_dom", "1"},      {"perfect_codes", "2/3a^5"}, {"min_perfect_dom", "-2a^2+2a+2"},
      {"tpd", "1/234881024a^80"}, {"m3", nullptr},            {"m4", nullptr},
      {"max_matchings", "-1/3a^10+11/3a^3"}};
  for (auto [name, expected] : cases) {
    c.guarded(name, [&, name = name, expected = expected] {
      auto t0 = Clock::now();
      auto s = system_of(name);
      auto cert = certificate_of(name);
      auto r = search::verify_against(s, cert);
      bool pass = r.valid && cert.alpha == cli::parse_alpha(cli::fixture(name).alpha);
      if (expected) pass = pass && r.C == numeric::parse_number(expected, cert.field);
      c.check(pass, std::string(name) + ": valid, C = " + r.C.to_expression() + " (" + seconds(t0) + ")");
    });
  }
}

// 2 -----------------------------------------------------------------------

void searches(Criterion& c) {
  search::SearchConfig cfg;  // 10^4 iterations
  for (const char* name : {"indep_dom", "perfect_codes", "min_perfect_dom"}) {
    c.guarded(name, [&, name = name] {
      auto t0 = Clock::now();
      auto s = system_of(name);
      auto cert = certificate_of(name);
      auto r = search::find_certificate(s, cert.alpha, {}, cfg);
      bool found = r.status == search::SearchResult::Status::Found;
      c.check(found && conv_equal(r.X, cert.vectors),
              std::string(name) + ", no seeds: " + (found ? "found " : "budget exhausted, ") +
                  std::to_string(r.X.size()) + " vectors after " + std::to_string(r.iterations) + " iterations" +
                  (found ? (conv_equal(r.X, cert.vectors) ? ", conv-equal to the printed set" : ", NOT conv-equal") : "") +
                  " (" + seconds(t0) + ")");
    });
  }
  c.guarded("m4", [&] {
    auto t0 = Clock::now();
    auto s = system_of("m4");
    auto cert = certificate_of("m4");
    search::SearchConfig small;
    small.max_iterations = 25;
    auto bare = search::find_certificate(s, cert.alpha, {}, small);
    c.check(bare.status == search::SearchResult::Status::BudgetExhausted,
            "m4, no seeds: still growing after 25 iterations (" + std::to_string(bare.X.size()) + " vectors)");
    auto seeded = search::find_certificate(s, cert.alpha, cert.seeds, cfg);
    c.check(seeded.status == search::SearchResult::Status::Found && conv_equal(seeded.X, cert.vectors),
            "m4, seed (0, 1/13a^8+1/6, 0, 0, 0): found " + std::to_string(seeded.X.size()) +
                " vectors, conv-equal to the printed set (" + seconds(t0) + ")");
  });
}

// 3 -----------------------------------------------------------------------

void oracles(Criterion& c) {
  auto t0 = Clock::now();
  c.guarded("formulas", [&] {
    auto s = system_of("indep_dom");
    auto m = oracle::max_counts_via_levels(s, 13);
    bool pass = true;
    for (std::size_t n = 1; n <= 13; ++n) {
      long expected = n % 2 ? 1L << ((n - 1) / 2) : (1L << (n / 2 - 1)) + 1;
      pass = pass && m[n] == AlgebraicNumber(expected);
    }
    c.check(pass, "independent dominating sets: 2^((n-1)/2) for odd n <= 13, 2^(n/2-1)+1 for even n <= 12");
  });
  for (const auto& e : cli::registry()) {
    c.guarded(e.name, [&] {
      auto s = bilinear::load_system(e.system_path());
      auto a = automaton::decompile(s);
      if (!a) return c.check(false, e.name + ": not an automaton system");
      auto lv = oracle::max_counts_via_levels(s, 10);
      bool agree = true;
      for (std::size_t k = 1; k <= 10; ++k)
        agree = agree && lv[k] == AlgebraicNumber(Rational(oracle::max_count_via_shapes(*a, k, {12, 8, 1})));
      c.check(agree, e.name + ": levels = shapes for k <= 10");
    });
  }
  std::cout << "    (" << seconds(t0) << ")\n";
}

// 4 -----------------------------------------------------------------------

void audits(Criterion& c, bool long_runs) {
  for (const auto& e : cli::registry()) {
    if (!e.has_certificate) continue;
    if (e.long_verify && !long_runs) {
      std::cout << "    skip " << e.name << " (certificate takes minutes to verify; use --long)\n";
      continue;
    }
    c.guarded(e.name, [&] {
      auto s = bilinear::load_system(e.system_path());
      auto cert = search::load_certificate(e.certificate_path());
      auto r = search::verify_against(s, cert);
      if (!r.valid) return c.check(false, e.name + ": certificate invalid");
      auto lines = oracle::bound_audit(s, r.C, cert.alpha, 10);
      c.check(lines.size() == 10, e.name + ": max count <= C*alpha^k for k <= 10");
    });
  }
}

// 5 -----------------------------------------------------------------------

spectral::Matrix fixture_matrix(const std::string& name) {
  auto s = system_of(name);
  return spectral::transfer_matrix(s, spectral::load_gadget(cli::fixture(name).gadget_path()).expr);
}

void spectral_checks(Criterion& c) {
  const Rational w = ten_to_minus(30);
  c.guarded("induced", [&] {
    auto p = spectral::char_poly(fixture_matrix("max_induced_matchings"));
    c.check(p == numeric::parse_polynomial("-x^5+12x^4-33x^3+132x^2-135x+108"),
            "maximal induced matchings: char poly = -x^5+12x^4-33x^3+132x^2-135x+108");
  });
  c.guarded("m5", [&] {
    const long printed[6][6] = {{6561, 6561, 0, 0, 0, 0},      {44064, 44064, 50625, 0, 0, 0},
                                {54000, 54000, 54000, 50625, 0, 0}, {5832, 5832, 0, 0, 6561, 0},
                                {256, 0, 0, 0, 0, 256},         {256, 0, 0, 0, 0, 0}};
    auto m = fixture_matrix("m5");
    bool same = m.size() == 6;
    for (std::size_t i = 0; same && i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) same = same && m[i][j] == AlgebraicNumber(printed[i][j]);
    c.check(same, "5-matchings: transfer matrix equals the printed 6x6");
    // beta^45 is the largest root of the quoted sextic in x^45
    c.check(spectral::char_poly(m) ==
                numeric::parse_polynomial("x^6-104625x^5-14946778125000x^3-28242953648100000000x-7230196133913600000000"),
            "5-matchings: char poly = x^6 - 104625x^5 - 14946778125000x^3 - 28242953648100000000x - 7230196133913600000000");
  });
  c.guarded("mpd", [&] {
    auto p = spectral::char_poly(fixture_matrix("min_perfect_dom"));
    auto [q, r] = numeric::Polynomial::divmod(p, numeric::parse_polynomial("x^3-x-1"));
    c.check(r.is_zero(), "minimal perfect dominating sets: x^3-x-1 divides " + p.to_string());
  });
  auto bracket_check = [&](const std::string& label, std::pair<Rational, Rational> b, const std::string& dec) {
    c.check(b.second - b.first <= w && cli::quotes_decimal(b, dec),
            label + ": width-1e-30 bracket [" + numeric::to_decimal(b.first, 31) + ", " +
                numeric::to_decimal(b.second, 31) + "] gives " + dec);
  };
  c.guarded("plastic", [&] {
    auto r = spectral::largest_real_root(numeric::parse_polynomial("x^3-x-1"), w);
    bracket_check("largest root of x^3-x-1", {r.lo, r.hi}, "1.32472");
  });
  for (auto [name, dec] : {std::pair{"max_induced_matchings", "1.331576"}, {"m5", "1.293211"}}) {
    c.guarded(name, [&, name = name, dec = dec] {
      auto spec = spectral::load_gadget(cli::fixture(name).gadget_path());
      auto lb = spectral::lower_bound(system_of(name), spec.expr, *spec.size);
      bracket_check(std::string(name) + " beta (" + lb.dominance() + ")", lb.beta_interval(w), dec);
    });
  }
  c.guarded("irr", [&] {
    auto r = spectral::largest_real_root(numeric::parse_polynomial("x^9-48"), w);
    bracket_check("largest root of x^9-48", {r.lo, r.hi}, "1.53746");
  });
}

// 6 -----------------------------------------------------------------------

void gap(Criterion& c, bool long_runs) {
  c.guarded("gap", [&] {
    const auto& e = cli::fixture("max_induced_matchings");
    auto alpha = cli::parse_alpha(e.alpha);
    auto spec = spectral::load_gadget(e.gadget_path());
    auto lb = spectral::lower_bound(system_of(e.name), spec.expr, *spec.size);
    // interval separation: refine beta until the bracket of alpha - beta clears 0
    // and sits below the quoted gap
    const Rational a = alpha.rational_value(), limit = 7 * ten_to_minus(26);
    bool done = false;
    for (unsigned long digits = 30; digits <= 120 && !done; digits += 30) {
      auto [lo, hi] = lb.beta_interval(ten_to_minus(digits));
      Rational gap_lo = a - hi, gap_hi = a - lo;
      if (gap_lo > 0 && gap_hi < limit) {
        c.check(true, "0 < " + numeric::to_decimal(gap_lo, 32) + " <= alpha - beta <= " +
                          numeric::to_decimal(gap_hi, 32) + " < 7e-26");
        done = true;
      }
    }
    if (!done) c.check(false, "alpha - beta not separated into (0, 7e-26)");
  });
  if (!long_runs) {
    std::cout << "    skip verifying and re-finding the 80-vector certificate at alpha (flagged long run, use --long)\n";
    return;
  }
  c.guarded("stored", [&] {
    auto t0 = Clock::now();
    const auto& e = cli::fixture("max_induced_matchings");
    auto cert = search::load_certificate(e.certificate_path());
    auto r = search::verify_against(system_of(e.name), cert);
    c.check(r.valid && cert.alpha == cli::parse_alpha(e.alpha),
            "stored " + std::to_string(cert.vectors.size()) + "-vector certificate verifies (" + seconds(t0) + ")");
  });
  c.guarded("search", [&] {
    auto t0 = Clock::now();
    const auto& e = cli::fixture("max_induced_matchings");
    auto s = system_of(e.name);
    auto alpha = cli::parse_alpha(e.alpha);
    auto r = search::find_certificate(s, alpha, {});
    bool found = r.status == search::SearchResult::Status::Found;
    c.check(found && search::verify_certificate(s, alpha, r.X).valid,
            "certificate search at alpha: " + std::string(found ? "found " : "budget exhausted, ") +
                std::to_string(r.X.size()) + " vectors (" + seconds(t0) + ")");
  });
}

// 7 -----------------------------------------------------------------------

void irredundant(Criterion& c, bool long_runs) {
  auto t0 = Clock::now();
  const auto& e = cli::fixture("max_irredundant");
  c.guarded("system", [&] {
    auto s = bilinear::load_system(e.system_path());
    c.check(s.dim() == 20, "system parses with dim 20");
    auto t = bilinear::trim(s);
    c.check(t.system.dim() == 20 && t.kept.size() == 20, "trim keeps all 20 coordinates");
  });
  c.guarded("lower", [&] {
    auto spec = spectral::load_gadget(e.gadget_path());
    auto lb = spectral::lower_bound(system_of(e.name), spec.expr, *spec.size);
    auto count = spectral::lower_bound_from_count(48, 9);
    c.check(numeric::compare(AlgebraicNumber::generator(lb.lambda_field), AlgebraicNumber(48)) == 0,
            "star-of-P2 gadget: largest eigenvalue 48 per 9-vertex block");
    const Rational w = ten_to_minus(30);
    c.check(cli::quotes_decimal(count.beta_interval(w), "1.53746"), "48^(1/9) ~ 1.53746");
    c.check(count.beta_exact() < AlgebraicNumber(frac(14, 9)), "48^(1/9) < 14/9 exactly");
  });
  std::cout << "    (" << seconds(t0) << ")\n";
  if (!long_runs) {
    std::cout << "    skip alpha = 14/9 certificate search (hours; use --long)\n";
    return;
  }
  c.guarded("search", [&] {
    auto s = system_of(e.name);
    search::SearchConfig cfg;
    auto r = search::find_certificate(s, AlgebraicNumber(frac(14, 9)), {}, cfg);
    c.check(r.status == search::SearchResult::Status::Found, "certificate search at 14/9: " +
                                                                  std::to_string(r.X.size()) + " vectors");
  });
}

// 8 -----------------------------------------------------------------------

Vector random_vector(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(0, 9), den(1, 4);
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(frac(num(rng), den(rng)));
  return v;
}

void properties(Criterion& c) {
  auto t0 = Clock::now();
  std::mt19937 rng(2024);

  c.guarded("field", [&] {
    bool ok = true;
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (const char* p : {"x^3-x-1", "x^4-x^3-1", "x^14-11x^7+9"}) {
      auto f = numeric::NumberField::make(numeric::parse_polynomial(p), 1, 2);
      auto rnd = [&] {
        std::vector<Rational> cs;
        for (int i = 0; i < f->degree(); ++i) cs.push_back(frac(num(rng), den(rng)));
        return AlgebraicNumber(f, cs);
      };
      for (int i = 0; i < 10; ++i) {
        auto a = rnd(), b = rnd(), d = rnd();
        ok = ok && (a * b) * d == a * (b * d) && a * (b + d) == a * b + a * d && a + b == b + a;
        ok = ok && (a.is_zero() || a * a.inverse() == AlgebraicNumber(1)) && a.sign() == -(-a).sign();
      }
    }
    c.check(ok, "field axioms, inverses and sign symmetry in three number fields");
  });

  c.guarded("simplex", [&] {
    // a degenerate problem on which the textbook largest-coefficient rule cycles
    geometry::LPProblem p;
    p.rows = {{frac(1, 4), -8, -1, 9}, {frac(1, 2), -12, frac(-1, 2), 3}, {0, 0, 1, 0}};
    p.senses = {geometry::Sense::Le, geometry::Sense::Le, geometry::Sense::Le};
    p.rhs = {0, 0, 1};
    p.objective = {frac(3, 4), -20, frac(1, 2), -6};
    auto r = geometry::lp_solve(p);
    c.check(r.status == geometry::LPResult::Status::Optimal && r.value == AlgebraicNumber(frac(5, 4)),
            "exact simplex on a cycling-prone degenerate LP: optimum 5/4");
    auto f = numeric::parse_field("x^2-2 ; interval 1 2");
    auto inv = numeric::parse_number("1/2a", f);
    std::vector<Vector> X = {{0, 0, inv}, {0, frac(1, 2), frac(1, 2)}, {inv, inv, 0}};
    c.check(geometry::member_dominated_hull({inv, inv, 0}, X) &&
                !geometry::member_dominated_hull({inv + AlgebraicNumber(frac(1, 1000)), inv, 0}, X),
            "membership at and just above a hull vertex");
  });

  c.guarded("bilinear", [&] {
    bool ok = true;
    for (const auto& e : cli::registry()) {
      auto s = bilinear::load_system(e.system_path());
      auto u = random_vector(s.dim(), rng), v = random_vector(s.dim(), rng), w = random_vector(s.dim(), rng);
      ok = ok && s.apply(geometry::add(u, v), w) == geometry::add(s.apply(u, w), s.apply(v, w));
      ok = ok && s.apply(w, geometry::add(u, v)) == geometry::add(s.apply(w, u), s.apply(w, v));
    }
    c.check(ok, "apply is bilinear on every fixture");
  });

  c.guarded("scaling", [&] {
    auto s = system_of("perfect_codes");
    auto cert = certificate_of("perfect_codes");
    auto scaled = s.with_initial(s.scale_initial(cert.alpha));
    auto a = oracle::max_counts_via_levels(s, 8), b = oracle::max_counts_via_levels(scaled, 8);
    bool ok = true;
    for (std::size_t k = 1; k <= 8; ++k) ok = ok && b[k] * cert.alpha.pow(k) == a[k];
    c.check(ok, "levels of V0/alpha are alpha^-k times the levels of V0 (k <= 8)");
  });

  c.guarded("trim", [&] {
    // pad indep_dom with an unreachable coordinate and a coordinate that never reaches F
    auto s = system_of("indep_dom");
    std::vector<bilinear::Term> terms = s.terms();
    terms.push_back({3, 3, 0, 1});  // 4 <- 4 x 1: never fed
    terms.push_back({4, 0, 0, 1});  // 5 <- 1 x 1: reachable but useless
    Vector v0 = s.v0(), f = s.f();
    v0.resize(5);
    f.resize(5);
    bilinear::BilinearSystem padded(5, terms, v0, f);
    auto t = bilinear::trim(padded);
    bool ok = t.kept == std::vector<std::size_t>{0, 1, 2} &&
              oracle::max_counts_via_levels(padded, 9) == oracle::max_counts_via_levels(t.system, 9);
    c.check(ok, "trim drops injected dead coordinates and keeps every level maximum");
  });

  c.guarded("hull", [&] {
    bool ok = true;
    for (int round = 0; round < 10; ++round) {
      std::vector<Vector> X;
      for (int i = 0; i < 7; ++i) X.push_back(random_vector(3, rng));
      auto Y = geometry::hull_reduce(X);
      ok = ok && geometry::hull_reduce(Y) == Y;
      for (const auto& x : X) ok = ok && geometry::member_dominated_hull(x, Y);
    }
    c.check(ok, "hull_reduce is idempotent and keeps conv<=");
  });

  c.guarded("determinism", [&] {
    auto s = system_of("m4");
    auto cert = certificate_of("m4");
    search::SearchConfig one, two;
    two.threads = 2;
    auto a = search::find_certificate(s, cert.alpha, cert.seeds, one);
    auto b = search::find_certificate(s, cert.alpha, cert.seeds, two);
    c.check(a.X == b.X && search::format_certificate({"", cert.field, cert.alpha, a.X, {}, {}, {}}) ==
                              search::format_certificate({"", cert.field, cert.alpha, b.X, {}, {}, {}}),
            "search output is identical across runs and thread counts");
  });

  c.guarded("corrupt", [&] {
    auto s = system_of("indep_dom");
    auto cert = certificate_of("indep_dom");
    auto v = search::verify_against(s, cert);
    bool audit_caught = false;
    try {
      oracle::bound_audit(s, v.C.scaled(frac(1, 2)), cert.alpha, 10);
    } catch (const AuditFailure& f) {
      audit_caught = f.k() <= 3;
    }
    auto bad = cert.vectors;
    bad.erase(bad.begin() + 1);
    auto r = search::verify_certificate(s, cert.alpha, bad);
    c.check(audit_caught && !r.valid && r.witness, "halved C fails the audit; a dropped vector gives a witness");
  });
  std::cout << "    (" << seconds(t0) << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only, expect_fail;
  bool long_runs = false;
  std::string fixture_dir;
  app.add_option("--only", only, "run only these criteria")->check(CLI::Range(1, 8));
  app.add_option("--expect-fail", expect_fail, "criteria documented as unattainable")->check(CLI::Range(1, 8));
  app.add_flag("--long", long_runs, "include the long runs of criteria 4, 6 and 7");
  app.add_option("--fixtures", fixture_dir, "fixture directory");
  CLI11_PARSE(app, argc, argv);
  if (!fixture_dir.empty()) cli::set_fixture_dir(fixture_dir);

  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"certificate verification of the printed sets", certificates},
      {"certificate search reproduction", searches},
      {"oracle formulas and dual-oracle agreement", oracles},
      {"bound audits for k <= 10", [&](Criterion& c) { audits(c, long_runs); }},
      {"spectral exactness", spectral_checks},
      {"gap 0 < alpha - beta < 7e-26 for maximal induced matchings", [&](Criterion& c) { gap(c, long_runs); }},
      {"maximal irredundant sets (substituted properties)", [&](Criterion& c) { irredundant(c, long_runs); }},
      {"property suites", properties},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), n) == only.end()) continue;
    std::cout << "criterion " << n << ": " << criteria[i].first << std::endl;
    Criterion c;
    auto t0 = Clock::now();
    criteria[i].second(c);
    std::cout << "criterion " << n << " " << (c.ok ? "PASS" : "FAIL") << " (" << seconds(t0) << ")" << std::endl;
    if (!c.ok) failed.insert(n);
  }

  std::set<int> expected;
  for (int n : expect_fail)
    if (only.empty() || std::find(only.begin(), only.end(), n) != only.end()) expected.insert(n);
  if (failed != expected) {
    std::cout << "unexpected outcome\n";
    return 1;
  }
  if (!failed.empty()) std::cout << "failures match the documented unattainable criteria\n";
  return 0;
}
