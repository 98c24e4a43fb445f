#ifndef GROWTH_CLI_COMMANDS_HPP
#define GROWTH_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <utility>

#include "growth/numeric/rational.hpp"

namespace growth::cli {

/// Exit codes.
enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2 };

/// Runs one command line (argv[0] is the program name). Never throws; errors are
/// written to `err` and mapped to an exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// True when `decimal` (e.g. "1.331576") is the rounding or the truncation of every
/// value in the bracket.
bool quotes_decimal(const std::pair<numeric::Rational, numeric::Rational>& bracket, const std::string& decimal);

}  // namespace growth::cli

#endif  // GROWTH_CLI_COMMANDS_HPP
