#ifndef GLYPHNET_CLI_HPP
#define GLYPHNET_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace glyphnet::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kInputError = 2,
  kVerificationFailure = 3,
};

/// Runs one command line (without the program name) and returns its exit
/// code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glyphnet::cli

#endif  // GLYPHNET_CLI_HPP
