#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recipart::cli {

enum ExitCode : int { kOk = 0, kRefuted = 1, kUnknown = 2, kUsage = 3 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int parse_and_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace recipart::cli
