#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace isingnpp {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagree = 1;  // correspond found inconsistent legs
inline constexpr int kExitUsage = 2;     // bad flags, unreadable or malformed input
inline constexpr int kExitCapacity = 3;  // work beyond a configured cap

// Runs one subcommand. args excludes the program name. Data goes to `out`
// unless -o is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isingnpp
