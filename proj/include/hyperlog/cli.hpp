#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperlog {

// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,      // unknown subcommand/flag, unparsable word or number
  kExitRefused = 3,    // evaluation refused or did not converge
};

// Runs the tool on argv-style arguments (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperlog
