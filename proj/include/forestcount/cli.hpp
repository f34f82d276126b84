#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace forestcount::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,   // bad flags, unreadable input, malformed edge list or spec
  kDomainError = 3,  // well-formed input outside an operation's domain
};

inline constexpr const char* kSchemaVersion = "1";

/// Runs the forestcount command line. `args` excludes the program name.
/// JSON and CSV (when --out is "-") go to `out`, human-readable reports and
/// diagnostics to `err`; `in` backs the "-" input path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace forestcount::cli
