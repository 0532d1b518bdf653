#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "moduli/evidence.hpp"

namespace moduli::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2, kCertificateFailed = 3 };

/// Verdict object behind every command. Keys serialize sorted; exact
/// numbers are strings in their canonical parseable form.
struct Report {
  std::string command;
  std::vector<std::string> argv;
  nlohmann::json input = nlohmann::json::object();
  nlohmann::json result = nlohmann::json::object();
  std::vector<Evidence> evidence;
  std::vector<std::string> citations;
  std::vector<std::string> notes;
  std::string error;
  int exit_code = kOk;
  double elapsed_ms = 0.0;

  bool certificates_passed() const;
  /// kCertificateFailed when a certificate failed and no input error was set.
  void settle_exit_code();
  /// Two-space indented, trailing newline. `timing` adds the "timing" key.
  std::string to_json(bool timing) const;
  /// A few lines for --verbose.
  std::string summary() const;
};

const char* exit_status_name(int code);

}  // namespace moduli::cli
