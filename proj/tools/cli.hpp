#pragma once

// Command-line front end, kept in a library so tests can drive it directly.

#include <ostream>
#include <string>
#include <vector>

namespace vlab::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

/// args excludes the program name. Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vlab::cli
