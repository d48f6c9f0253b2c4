#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace angleopt {

/// Runs the command-line interface on `args` (without the program name),
/// writing results to `out` and diagnostics to `err`. Returns the process
/// exit code: 0 on success, 1 on runtime failure (missing file, bad data),
/// 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace angleopt
