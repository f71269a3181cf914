#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abelforge::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerifyFailed = 1,
    kError = 2,
    kNotIntegrable = 3,
    kIndeterminate = 4,
};

/// Runs one command line (without the program name). Results go to `out`
/// unless an output path is configured; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace abelforge::cli
