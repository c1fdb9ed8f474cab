#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace signed_spectra {

enum ExitCode : int { exit_ok = 0, exit_violation = 1, exit_usage = 2 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 when a checked inequality or
/// invariant fails, 2 on usage, parse or precondition errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace signed_spectra
