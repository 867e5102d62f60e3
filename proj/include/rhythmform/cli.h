// Command-line front end.
//
// Exit codes:
//   0  success
//   1  internal error
//   2  usage error (unknown flag, bad flag value)
//   3  input file missing or unreadable
//   4  input could not be parsed or failed validation
//   5  inputs to `compare` used different configurations
//   6  analysis impossible (empty piece, too few onsets, shorter than a window)
//   7  output could not be written

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rhythmform {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitUnreadable = 3,
  kExitParse = 4,
  kExitComparability = 5,
  kExitAnalysis = 6,
  kExitOutput = 7,
};

/// Runs the CLI on `args` (args[0] is the program name).
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rhythmform
