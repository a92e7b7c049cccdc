#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fptvc {

// Exit codes shared by every subcommand.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

// Entry point behind the `fptvc` executable. args[0] is the program name.
// Subcommands: decide, solve, gen, verify, bench.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fptvc
