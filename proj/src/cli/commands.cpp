#include "growth/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "growth/automaton/automaton.hpp"
#include "growth/bilinear/system_io.hpp"
#include "growth/cli/alpha_spec.hpp"
#include "growth/cli/fixtures.hpp"
#include "growth/error.hpp"
#include "growth/geometry/hull.hpp"
#include "growth/numeric/text.hpp"
#include "growth/oracle/oracle.hpp"
#include "growth/search/search.hpp"
#include "growth/search/verify.hpp"
#include "growth/spectral/spectral.hpp"

namespace growth::cli {

using numeric::AlgebraicNumber;
using numeric::Rational;

namespace {

const Rational& report_width() {
  static const Rational w = Rational(1) / numeric::pow(Rational(10), 30);
  return w;
}

std::string dec(const Rational& x, int digits = 12) { return numeric::to_decimal(x, digits); }

std::string interval(const std::pair<Rational, Rational>& b, int digits = 12) {
  return "[" + dec(b.first, digits) + ", " + dec(b.second, digits) + "]";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

std::string coefficient_list(const numeric::Polynomial& p) {
  std::string s;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) s += (i ? " " : "") + numeric::to_string(p.coeffs()[i]);
  return s;
}

// Same bilinear map, V0 and F.
bool same_system(const bilinear::BilinearSystem& a, const bilinear::BilinearSystem& b) {
  if (a.dim() != b.dim() || a.v0() != b.v0() || a.f() != b.f()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      bilinear::Vector u(a.dim()), v(a.dim());
      u[i] = 1;
      v[j] = 1;
      if (a.apply(u, v) != b.apply(u, v)) return false;
    }
  return true;
}

std::vector<bilinear::Vector> seeds_from(const std::string& path) {
  auto c = search::load_certificate(path);
  return c.seeds.empty() ? c.vectors : c.seeds;
}

// ---- compile -------------------------------------------------------------

struct CompileArgs {
  std::string automaton, output;
  bool trim = false;
};

int cmd_compile(const CompileArgs& a, std::ostream& out) {
  auto s = automaton::compile(automaton::load_automaton(a.automaton));
  if (a.trim) s = bilinear::trim(s).system;
  auto text = format_system(s);
  if (a.output.empty()) out << text;
  else write_file(a.output, text);
  return kOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string system, certificate;
  std::vector<unsigned long> ns{10, 50, 100};
};

int cmd_verify(const VerifyArgs& a, unsigned threads, std::ostream& out) {
  auto s = bilinear::load_system(a.system);
  auto c = search::load_certificate(a.certificate);
  auto r = search::verify_against(s, c, {threads});
  out << "certificate: " << c.vectors.size() << " vectors, system dim " << s.dim() << "\n";
  if (!r.valid) {
    out << "status: invalid\n";
    if (r.pair) out << "escaping product: B(x" << r.pair->first + 1 << ", x" << r.pair->second + 1 << ")\n";
    else out << "V0/alpha lies outside conv(X)\n";
    if (r.witness) {
      out << "witness:";
      for (const auto& x : *r.witness) out << " " << x.to_expression();
      out << "\n";
    }
    return kFailed;
  }
  out << "status: valid\n" << search::upper_bound_report(r.C, c.alpha, a.ns);
  if (c.stated_c) {
    bool same = *c.stated_c == r.C;
    out << "stated C " << (same ? "matches" : "differs from") << " max F.x\n";
    if (!same) return kFailed;
  }
  return kOk;
}

// ---- bound ---------------------------------------------------------------

struct BoundArgs {
  std::string system, alpha, seed_file, emit, resume;
  std::size_t max_iter = 10000, max_vectors = 2000;
};

int cmd_bound(const BoundArgs& a, unsigned threads, std::ostream& out, std::ostream& err) {
  auto s = bilinear::load_system(a.system);
  auto alpha = parse_alpha(a.alpha);
  std::vector<bilinear::Vector> seeds, resume;
  if (!a.seed_file.empty()) seeds = seeds_from(a.seed_file);
  if (!a.resume.empty()) resume = search::load_certificate(a.resume).vectors;
  search::SearchConfig cfg;
  cfg.max_iterations = a.max_iter;
  cfg.max_vectors = a.max_vectors;
  cfg.threads = threads;
  auto r = search::find_certificate(s, alpha, seeds, cfg, resume, [&](const search::IterationTrace& t) {
    err << "iteration " << t.iteration << ": |X| = " << t.size << ", escaped " << t.escaped << ", max F.x ~ "
        << search::approx(t.max_f) << "\n";
  });

  search::Certificate cert;
  cert.field = alpha.field();
  cert.alpha = alpha;
  cert.vectors = r.X;
  cert.seeds = seeds;
  cert.state_names = s.state_names();
  const bool found = r.status == search::SearchResult::Status::Found;
  cert.title = found ? "certificate at alpha = " + a.alpha : "partial state at alpha = " + a.alpha;
  if (found) cert.stated_c = r.C;
  if (!a.emit.empty()) write_file(a.emit, format_certificate(cert, &s.f()));

  out << "iterations: " << r.iterations << "\n|X| = " << r.X.size() << "\n";
  if (found) {
    out << "status: found\n" << search::upper_bound_report(r.C, alpha, {10, 50, 100});
    if (a.emit.empty()) out << format_certificate(cert, &s.f());
    return kOk;
  }
  out << "status: budget exhausted\n";
  out << "max F.v / alpha^k over B^k(V0):\n";
  for (std::size_t k = 1; k < r.scaled_level_max.size(); ++k)
    out << "  k = " << k << ": " << search::approx(r.scaled_level_max[k]) << "\n";
  if (!a.emit.empty()) out << "partial state written to " << a.emit << " (use --resume)\n";
  return kFailed;
}

// ---- oracle --------------------------------------------------------------

struct OracleArgs {
  std::string system, automaton, audit;
  std::size_t k = 10;
  bool shapes = false, levels = false, no_prune = false;
};

int cmd_oracle(const OracleArgs& a, unsigned threads, std::ostream& out) {
  auto s = bilinear::load_system(a.system);
  if (!a.audit.empty()) {
    auto c = search::load_certificate(a.audit);
    auto v = search::verify_against(s, c, {threads});
    if (!v.valid) throw Error("certificate does not verify; nothing to audit");
    out << "C = " << v.C.to_expression() << "\nalpha = " << c.alpha.to_expression() << "\n";
    auto lines = oracle::bound_audit(s, v.C, c.alpha, a.k);
    for (const auto& l : lines)
      out << "k = " << l.k << ": max count " << l.count.to_string() << " <= C*alpha^k ~ "
          << search::approx(l.bound) << "\n";
    out << "audit passed for k <= " << a.k << "\n";
    return kOk;
  }
  const bool by_levels = a.levels || !a.shapes;
  std::vector<AlgebraicNumber> lv;
  if (by_levels) lv = oracle::max_counts_via_levels(s, a.k, !a.no_prune);
  std::optional<automaton::TreeAutomaton> aut;
  if (a.shapes) {
    aut = a.automaton.empty() ? automaton::decompile(s) : automaton::load_automaton(a.automaton);
    if (!aut) throw Error("the system is not an automaton system; pass --automaton");
  }
  bool agree = true;
  for (std::size_t k = 1; k <= a.k; ++k) {
    out << "k = " << k << ":";
    if (by_levels) out << " levels " << lv[k].to_string();
    if (a.shapes) {
      oracle::ShapeOptions opt;
      opt.threads = threads;
      auto n = oracle::max_count_via_shapes(*aut, k, opt);
      out << " shapes " << n.get_str();
      if (by_levels && AlgebraicNumber(Rational(n)) != lv[k]) out << " MISMATCH", agree = false;
    }
    out << "\n";
  }
  return agree ? kOk : kFailed;
}

// ---- spectral ------------------------------------------------------------

struct SpectralArgs {
  std::string system, gadget;
  unsigned long size = 0;
  int digits = 12;
};

void print_lower_bound(const spectral::LowerBound& lb, int digits, std::ostream& out) {
  out << "char poly (low to high): " << coefficient_list(lb.char_poly) << "\n";
  out << "lambda: root of " << lb.lambda_field->polynomial().to_string() << " in "
      << interval(lb.lambda_field->isolating_interval(report_width()), digits) << "\n";
  out << "beta = lambda^(1/" << lb.size << ")\n";
  auto b = lb.beta_interval(report_width());
  out << "beta in " << interval(b, 32) << "\n";
  if (auto r = spectral::rounded(b, digits); !r.empty()) out << "beta ~ " << r << "\n";
  out << "dominance: " << lb.dominance() << "\n";
}

int cmd_spectral(const SpectralArgs& a, std::ostream& out) {
  auto s = bilinear::load_system(a.system);
  auto spec = spectral::load_gadget(a.gadget);
  unsigned long size = a.size ? a.size : spec.size.value_or(0);
  if (!size) throw Error("gadget size unknown; pass --size");
  auto m = spectral::transfer_matrix(s, spec.expr);
  out << "gadget: " << spectral::to_string(spec.expr) << "\nsize: " << size << "\nM =\n";
  for (const auto& row : m) {
    out << " ";
    for (const auto& x : row) out << " " << x.to_string();
    out << "\n";
  }
  print_lower_bound(spectral::lower_bound_from_matrix(m, size), a.digits, out);
  return kOk;
}

// ---- fixtures ------------------------------------------------------------

struct Checker {
  std::ostream& out;
  bool ok = true;
  void line(bool pass, const std::string& what, const std::string& cite = "") {
    out << (pass ? "  PASS " : "  FAIL ") << what;
    if (!cite.empty()) out << "  [" << cite << "]";
    out << "\n";
    ok = ok && pass;
  }
};

void run_fixture(const FixtureEntry& e, bool long_runs, unsigned threads, Checker& ck) {
  ck.out << e.name << ": " << e.title << "\n";
  auto s = bilinear::load_system(e.system_path());
  auto alpha = parse_alpha(e.alpha);
  ck.line(quotes_decimal(alpha.decimal_interval(report_width()), e.alpha_decimal.value),
          "alpha = " + e.alpha + " ~ " + e.alpha_decimal.value, e.alpha_decimal.citation);

  if (e.has_automaton) {
    auto a = automaton::load_automaton(e.automaton_path());
    ck.line(same_system(automaton::compile(a), s), "compiled automaton equals the system file");
  }
  if (auto a = automaton::decompile(s)) {
    auto lv = oracle::max_counts_via_levels(s, 8);
    bool agree = true;
    for (std::size_t k = 1; k <= 8; ++k)
      agree = agree && AlgebraicNumber(Rational(oracle::max_count_via_shapes(*a, k, {12, 8, threads}))) == lv[k];
    ck.line(agree, "levels and shapes agree for k <= 8");
  }

  if (e.has_certificate && e.long_verify && !long_runs)
    ck.out << "  SKIP certificate verification (long run; use --long)\n";
  if (e.has_certificate && (!e.long_verify || long_runs)) {
    auto c = search::load_certificate(e.certificate_path());
    ck.line(c.alpha == alpha, "certificate alpha matches " + e.alpha);
    auto v = search::verify_against(s, c, {threads});
    ck.line(v.valid, "certificate verifies (" + std::to_string(c.vectors.size()) + " vectors), C = " +
                         v.C.to_expression());
    if (v.valid) {
      if (e.c) ck.line(v.C == numeric::parse_number(e.c->value, c.field), "C = " + e.c->value, e.c->citation);
      try {
        oracle::bound_audit(s, v.C, c.alpha, e.audit_kmax);
        ck.line(true, "audit max count <= C*alpha^k for k <= " + std::to_string(e.audit_kmax));
      } catch (const AuditFailure& f) {
        ck.line(false, std::string("audit: ") + f.what());
      }
    }
  }

  auto upper = spectral::bracket_of(alpha);
  if (e.has_gadget) {
    auto spec = spectral::load_gadget(e.gadget_path());
    auto lb = spectral::lower_bound(s, spec.expr, spec.size.value_or(1));
    auto b = lb.beta_interval(report_width());
    std::string what = "lower bound beta in " + interval(b);
    if (e.beta) ck.line(quotes_decimal(b, e.beta->value), what + " ~ " + e.beta->value, e.beta->citation);
    ck.line(spectral::compare_separated(lb.beta(), upper) <= 0, "beta <= alpha (" + lb.dominance() + ")");
  }
  if (e.count) {
    auto lb = spectral::lower_bound_from_count(e.count->count, e.count->size);
    auto b = lb.beta_interval(report_width());
    ck.line(spectral::compare_separated(lb.beta(), upper) <= 0,
            "count bound " + std::to_string(e.count->count) + "^(1/" + std::to_string(e.count->size) + ") in " +
                interval(b) + " <= alpha",
            e.count->citation);
  }
  if (e.long_run && !long_runs) ck.out << "  SKIP certificate search (long run; use --long)\n";
  if (e.long_run && long_runs) {
    std::vector<bilinear::Vector> seeds;
    if (e.has_certificate) seeds = search::load_certificate(e.certificate_path()).seeds;
    search::SearchConfig cfg;
    cfg.threads = threads;
    auto r = search::find_certificate(s, alpha, seeds, cfg);
    bool same = true;
    if (e.has_certificate && r.status == search::SearchResult::Status::Found) {
      auto stored = search::load_certificate(e.certificate_path()).vectors;
      for (const auto& x : r.X) same = same && geometry::member_dominated_hull(x, stored);
      for (const auto& x : stored) same = same && geometry::member_dominated_hull(x, r.X);
    }
    ck.line(r.status == search::SearchResult::Status::Found && same,
            "certificate search at alpha = " + e.alpha + ": " + std::to_string(r.X.size()) + " vectors after " +
                std::to_string(r.iterations) + " iterations");
  }
  if (!e.note.empty()) ck.out << "  note: " << e.note << "\n";
}

int cmd_fixtures_list(std::ostream& out) {
  for (const auto& e : registry()) {
    out << e.name << "  " << e.title << "  alpha = " << e.alpha;
    if (e.has_certificate) out << "  certificate";
    if (e.has_gadget) out << "  gadget";
    if (e.has_automaton) out << "  automaton";
    if (e.long_run) out << "  (long)";
    out << "\n";
  }
  return kOk;
}

int cmd_fixtures_run(const std::vector<std::string>& names, bool all, bool long_runs, unsigned threads,
                     std::ostream& out) {
  Checker ck{out};
  std::vector<const FixtureEntry*> todo;
  if (all || names.empty())
    for (const auto& e : registry()) todo.push_back(&e);
  for (const auto& n : names) todo.push_back(&fixture(n));
  for (const auto* e : todo) run_fixture(*e, long_runs, threads, ck);
  out << (ck.ok ? "all checks passed\n" : "some checks FAILED\n");
  return ck.ok ? kOk : kFailed;
}

}  // namespace

bool quotes_decimal(const std::pair<Rational, Rational>& b, const std::string& decimal) {
  auto dot = decimal.find('.');
  const auto digits = dot == std::string::npos ? 0UL : static_cast<unsigned long>(decimal.size() - dot - 1);
  const Rational d = numeric::parse_rational(decimal);
  const Rational ulp = 1 / numeric::pow(Rational(10), digits);
  const bool rounds = b.first >= d - ulp / 2 && b.second < d + ulp / 2;
  const bool truncates = b.first >= d && b.second < d + ulp;
  return rounds || truncates;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Growth rates of vertex-set families on trees: exact upper and lower bounds"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads for search, verify and oracle")->check(CLI::PositiveNumber);

  CompileArgs ca;
  auto* compile = app.add_subcommand("compile", "compile a tree automaton to a bilinear system");
  compile->add_option("automaton", ca.automaton)->required()->check(CLI::ExistingFile);
  compile->add_option("-o,--output", ca.output, "write the system here instead of stdout");
  compile->add_flag("--trim", ca.trim, "drop inaccessible and useless coordinates");

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "search for an upper-bound certificate");
  bound->add_option("system,--system", ba.system)->required()->check(CLI::ExistingFile);
  bound->add_option("--alpha", ba.alpha, "p/q, root(poly,lo,hi) or nthroot(p/q,n)")->required();
  bound->add_option("--seed-file", ba.seed_file, "certificate-format file with seed lines")->check(CLI::ExistingFile);
  bound->add_option("--max-iter", ba.max_iter);
  bound->add_option("--max-vectors", ba.max_vectors);
  bound->add_option("--emit-certificate", ba.emit, "write the certificate (or partial state) here");
  bound->add_option("--resume", ba.resume, "partial state from an earlier run")->check(CLI::ExistingFile);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check a certificate exactly");
  verify->add_option("system,--system", va.system)->required()->check(CLI::ExistingFile);
  verify->add_option("certificate,--certificate", va.certificate)->required()->check(CLI::ExistingFile);
  verify->add_option("--n", va.ns, "orders at which to print the bound");

  OracleArgs oa;
  auto* orc = app.add_subcommand("oracle", "brute-force maximum counts");
  orc->add_option("system,--system", oa.system)->required()->check(CLI::ExistingFile);
  orc->add_option("--k", oa.k, "largest order")->check(CLI::PositiveNumber);
  auto* mode = orc->add_option_group("mode");
  mode->add_flag("--shapes", oa.shapes, "enumerate tree shapes (compares with levels if --levels too)");
  mode->add_flag("--levels", oa.levels, "enumerate B^k(V0)");
  mode->add_option("--audit", oa.audit, "certificate to audit against the levels")->check(CLI::ExistingFile);
  orc->add_option("--automaton", oa.automaton, "automaton for --shapes")->check(CLI::ExistingFile);
  orc->add_flag("--no-prune", oa.no_prune, "keep dominated vectors in the levels");

  SpectralArgs sa;
  auto* spec = app.add_subcommand("spectral", "lower bound from a periodic gadget");
  spec->add_option("system,--system", sa.system)->required()->check(CLI::ExistingFile);
  spec->add_option("gadget,--gadget", sa.gadget)->required()->check(CLI::ExistingFile);
  spec->add_option("--size", sa.size, "vertices per gadget iteration (default: the file's size line)");
  spec->add_option("--digits", sa.digits)->check(CLI::Range(1, 30));

  auto* fx = app.add_subcommand("fixtures", "registered examples");
  fx->require_subcommand(1);
  fx->add_subcommand("list", "list fixtures");
  std::vector<std::string> names;
  bool all = false, long_runs = false;
  auto* fxrun = fx->add_subcommand("run", "check fixtures against their expected constants");
  fxrun->add_option("names", names);
  fxrun->add_flag("--all", all, "every fixture");
  fxrun->add_flag("--long", long_runs, "include the long certificate searches");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*compile) return cmd_compile(ca, out);
    if (*bound) return cmd_bound(ba, threads, out, err);
    if (*verify) return cmd_verify(va, threads, out);
    if (*orc) return cmd_oracle(oa, threads, out);
    if (*spec) return cmd_spectral(sa, out);
    if (fx->got_subcommand("list")) return cmd_fixtures_list(out);
    return cmd_fixtures_run(names, all, long_runs, threads, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const AuditFailure& e) {
    err << "audit failure: " << e.what() << "\n";
    return kFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace growth::cli
