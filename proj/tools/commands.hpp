#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diffseq::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIncomplete = 2,  // NotFoundUpTo / Timeout / failed check
  kMismatch = 3,    // table1 cell differs from the reference value
};

/// Runs one command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diffseq::cli
