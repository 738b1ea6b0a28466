#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace leecode::cli {

/// Exit codes of run().
inline constexpr int exit_ok = 0;
inline constexpr int exit_fail = 1;   // Inconclusive certificate or failed reproduction
inline constexpr int exit_usage = 2;  // bad arguments or a computation error

/// Runs one command line (without the program name). The report goes to
/// `out` in one write; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leecode::cli
