#ifndef RAMICALC_CLI_HPP
#define RAMICALC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ramicalc::cli {

enum ExitCode : int {
    kSuccess = 0,
    kValidationFailure = 1,
    kMalformedInput = 2,
};

/// Runs one job. `args` excludes the program name. Artifacts go to the
/// paths named by --out (written atomically) or to `out`; diagnostics go
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramicalc::cli

#endif
