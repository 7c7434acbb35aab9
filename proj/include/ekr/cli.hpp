#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ekr::cli {

// Exit codes of the command-line front end.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailure = 1;  // a theorem-backed check failed
inline constexpr int kUsageError = 2;
inline constexpr int kResourceError = 3;

// Run one subcommand with argv-style arguments (program name excluded).
// Reports go to `out` or the --output path; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ekr::cli
