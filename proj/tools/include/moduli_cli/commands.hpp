#pragma once

#include <string>
#include <vector>

namespace moduli::cli {

struct CommandOutcome {
  int exit_code = 0;
  std::string out;  // JSON report, or help text
  std::string err;  // usage on input errors, summary with --verbose
};

/// Runs one command line (program name excluded). Reads
/// MODULI_FORGE_THREADS to cap census threads.
CommandOutcome run_command(const std::vector<std::string>& args);

/// `--lambda -5/2` becomes `--lambda=-5/2` for options taking a field
/// element or a sign, so negative values are not mistaken for flags.
std::vector<std::string> join_negative_values(const std::vector<std::string>& args);

}  // namespace moduli::cli
