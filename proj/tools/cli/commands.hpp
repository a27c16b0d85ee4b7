#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace discbound::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,     // bad flags, unparsable input, invalid parameters
  kExitIo = 3,        // unreadable input or unwritable output
  kExitCoverage = 4,  // empirical failure rate above tolerance
};

/// Runs one `discbound` invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace discbound::cli
