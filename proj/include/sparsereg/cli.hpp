#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sparsereg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCertificateFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line `args` (without the program name). Reports go to
// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sparsereg::cli
