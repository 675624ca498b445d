#ifndef QCAT_CLI_HPP
#define QCAT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qcat::cli {

enum ExitCode : int { kOk = 0, kViolations = 1, kInputError = 2 };

/// Runs one invocation. `args` excludes the program name. The JSON report
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcat::cli

#endif
