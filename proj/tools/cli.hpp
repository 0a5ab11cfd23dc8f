#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace argex::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kUnknownArgument = 3,
  kStatusMismatch = 4,
  kNoExtensions = 5,
  kTooLarge = 6,
  kViolations = 7,
};

// Runs one invocation. `args` excludes the program name. `in` serves input
// named "-". Errors produce a single `error: <kind>: <message>` line on err.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace argex::cli
