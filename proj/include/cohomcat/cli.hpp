#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cohomcat {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Runs one command line (arguments without the program name). The JSON report goes to
/// --output or `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cohomcat
