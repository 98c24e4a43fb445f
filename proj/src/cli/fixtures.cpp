#include "growth/cli/fixtures.hpp"

#include <filesystem>

#include "growth/error.hpp"

namespace growth::cli {

namespace {

std::string& fixture_dir() {
  static std::string dir = GROWTH_FIXTURE_DIR;
  return dir;
}

std::vector<FixtureEntry> build() {
  std::vector<FixtureEntry> r;

  FixtureEntry e;
  e.name = "indep_dom";
  e.title = "independent dominating sets";
  e.alpha = "root(x^2-2, 1, 2)";
  e.alpha_decimal = {"1.414214", "upper bound rho_n <= 2^(n/2)"};
  e.has_automaton = e.has_certificate = true;
  e.c = Expected{"1", "rho_n <= 2^(n/2) * max F.x = 2^(n/2)"};
  e.note = "exact maxima 2^((n-1)/2) for odd n, 2^(n/2-1)+1 for even n";
  r.push_back(e);

  e = {};
  e.name = "perfect_codes";
  e.title = "perfect codes";
  e.alpha = "nthroot(3, 7)";
  e.alpha_decimal = {"1.16993", "alpha = 3^(1/7)"};
  e.has_certificate = e.has_gadget = true;
  e.c = Expected{"2/3a^5", "C = 2/3 alpha^5"};
  e.beta = Expected{"1.16993", "3 codes per 7-vertex block, matching the upper bound"};
  e.audit_kmax = 10;
  r.push_back(e);

  e = {};
  e.name = "min_perfect_dom";
  e.title = "minimal perfect dominating sets";
  e.alpha = "root(x^3-x-1, 1, 2)";
  e.alpha_decimal = {"1.32472", "alpha the real root of x^3-x-1"};
  e.has_certificate = e.has_gadget = true;
  e.c = Expected{"-2a^2+2a+2", "C = -2 alpha^2 + 2 alpha + 2"};
  e.beta = Expected{"1.32472", "sharp on paths: P_n = M^n V0"};
  r.push_back(e);

  e = {};
  e.name = "tpd";
  e.title = "total perfect dominating sets";
  e.alpha = "nthroot(939524096, 85)";
  e.alpha_decimal = {"1.275157", "alpha = (2^27 * 7)^(1/85)"};
  e.has_certificate = true;
  e.c = Expected{"1/234881024a^80", "C = alpha^80 / 234881024"};
  e.beta = Expected{"1.275157", "2^27 * 7 sets per 85-vertex block"};
  e.count = CountBound{939524096, 85, "2^27 * 7 sets per 85-vertex block"};
  r.push_back(e);

  e = {};
  e.name = "m3";
  e.title = "3-matchings";
  e.alpha = "root(x^4-x^3-1, 1, 2)";
  e.alpha_decimal = {"1.3802", "alpha the real root of x^4-x^3-1 in (1,2)"};
  e.has_certificate = true;
  e.count = CountBound{15, 9, "star of paths: 15 selections per P_(r+6) block, r = 3"};
  r.push_back(e);

  e = {};
  e.name = "m4";
  e.title = "4-matchings";
  e.alpha = "nthroot(13, 9)";
  e.alpha_decimal = {"1.329754", "alpha = 13^(1/9)"};
  e.has_certificate = true;
  e.count = CountBound{15, 10, "star of paths: 15 selections per P_(r+6) block, r = 4"};
  e.note = "the search converges only with the extra seed (0, 1/13 a^8 + 1/6, 0, 0, 0)";
  r.push_back(e);

  e = {};
  e.name = "m5";
  e.title = "5-matchings";
  e.alpha = "22/17";
  e.alpha_decimal = {"1.29411", "alpha = 22/17"};
  e.has_certificate = e.has_gadget = true;
  e.beta = Expected{"1.293211", "beta^45 the largest eigenvalue of M"};
  e.count = CountBound{15, 11, "star of paths: 15 selections per P_(r+6) block, r = 5"};
  e.long_run = true;
  e.note = "the stored certificate has 59 vectors; the search takes about a minute";
  r.push_back(e);

  e = {};
  e.name = "max_matchings";
  e.title = "maximal matchings";
  e.alpha = "root(x^14-11x^7+9, 1, 2)";
  e.alpha_decimal = {"1.391664", "alpha^7 = (11 + sqrt 85) / 2"};
  e.has_certificate = true;
  e.c = Expected{"-1/3a^10+11/3a^3", "C = -1/3 alpha^10 + 11/3 alpha^3"};
  e.note = "the search converges only with the extra seed in the certificate";
  r.push_back(e);

  e = {};
  e.name = "max_induced_matchings";
  e.title = "maximal induced matchings";
  e.alpha = "4254960628685/3195429966304";
  e.alpha_decimal = {"1.331576", "rational upper constant, 80 vectors"};
  e.has_certificate = e.has_gadget = true;
  e.long_verify = true;
  e.beta = Expected{"1.331576", "char poly -x^5+12x^4-33x^3+132x^2-135x+108, gadget of 8 vertices"};
  e.long_run = true;
  e.note = "gap 0 < alpha - beta < 7e-26; the stored 80-vector certificate takes minutes to verify and to find";
  r.push_back(e);

  e = {};
  e.name = "max_irredundant";
  e.title = "maximal irredundant sets";
  e.alpha = "14/9";
  e.alpha_decimal = {"1.555556", "alpha = 14/9, 393 vectors"};
  e.has_gadget = true;
  e.beta = Expected{"1.53746", "beta = 48^(1/9), 2^4 + 4 * 2^3 = 48 per 9-vertex block"};
  e.count = CountBound{48, 9, "2^4 + 4 * 2^3 = 48 sets per 9-vertex block"};
  e.long_run = true;
  e.note = "the alpha = 14/9 certificate search takes hours";
  r.push_back(e);

  return r;
}

}  // namespace

std::string FixtureEntry::dir() const { return fixture_dir() + "/" + name; }

const std::vector<FixtureEntry>& registry() {
  static const std::vector<FixtureEntry> r = build();
  return r;
}

const FixtureEntry& fixture(const std::string& name) {
  for (const auto& e : registry())
    if (e.name == name) return e;
  throw Error("unknown fixture: " + name);
}

void set_fixture_dir(std::string dir) { fixture_dir() = std::move(dir); }

}  // namespace growth::cli
