#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wormkit::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kUnreachable = 3,
};

/// Runs the wormkit command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wormkit::cli
