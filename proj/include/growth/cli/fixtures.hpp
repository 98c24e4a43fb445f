#ifndef GROWTH_CLI_FIXTURES_HPP
#define GROWTH_CLI_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

namespace growth::cli {

/// Expected constant with where it comes from.
struct Expected {
  std::string value;     // exact expression in the certificate field, or a decimal
  std::string citation;
};

/// Lower bound from a plain count: `count` selections per block of `size` vertices.
struct CountBound {
  long count;
  unsigned long size;
  std::string citation;
};

struct FixtureEntry {
  std::string name, title;
  std::string alpha;                   // alpha spec of the upper bound
  Expected alpha_decimal;
  bool has_automaton = false, has_certificate = false, has_gadget = false;
  std::optional<Expected> c;           // stated C
  std::optional<Expected> beta;        // decimal of the lower bound
  std::optional<CountBound> count;
  std::size_t audit_kmax = 10;
  /// The certificate search takes long; only run on request.
  bool long_run = false;
  /// Verifying the stored certificate takes minutes as well.
  bool long_verify = false;
  std::string note;

  std::string dir() const;
  std::string system_path() const { return dir() + "/system.txt"; }
  std::string automaton_path() const { return dir() + "/automaton.txt"; }
  std::string certificate_path() const { return dir() + "/certificate.txt"; }
  std::string gadget_path() const { return dir() + "/gadget.txt"; }
};

const std::vector<FixtureEntry>& registry();
/// Throws Error for unknown names.
const FixtureEntry& fixture(const std::string& name);

/// Overrides the compiled-in fixture directory (tests, relocated installs).
void set_fixture_dir(std::string dir);

}  // namespace growth::cli

#endif  // GROWTH_CLI_FIXTURES_HPP
