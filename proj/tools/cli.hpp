#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hrmc::cli {

// Exit status contract.
inline constexpr int kExitPass = 0;     // highly resistant / sat / lemma holds
inline constexpr int kExitFail = 1;     // not highly resistant / unsat / violation
inline constexpr int kExitUsage = 2;    // bad flags, unreadable or invalid input
inline constexpr int kExitUnknown = 3;  // search budget exhausted

/// Environment variable consulted when --threads is not given.
inline constexpr const char* kThreadsEnv = "HRMC_THREADS";

/// Runs the command line `args` (without the program name). Documents go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hrmc::cli
