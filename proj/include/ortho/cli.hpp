#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ortho::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand: bound, spectrum, search, colour, families, psi, status, verify.
/// Data goes to `out` (or --out FILE), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ortho::cli
