#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace signut::cli {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitCapped = 3;

/// Runs one invocation. `args` excludes the program name. Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Directory holding fixtures/reg/<rho>/<n>.g6 unless overridden.
std::string default_fixtures_dir();

}  // namespace signut::cli
