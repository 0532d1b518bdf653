#include "moduli_cli/report.hpp"

#include <cstdio>
#include <sstream>

namespace moduli::cli {

const char* exit_status_name(int code) {
  switch (code) {
    case kOk: return "ok";
    case kNegative: return "negative";
    case kInputError: return "input-error";
    case kCertificateFailed: return "certificate-failed";
  }
  return "unknown";
}

bool Report::certificates_passed() const {
  for (const auto& ev : evidence)
    if (!ev.all_passed()) return false;
  return true;
}

void Report::settle_exit_code() {
  if (exit_code == kInputError) return;
  if (!certificates_passed()) exit_code = kCertificateFailed;
}

std::string Report::to_json(bool timing) const {
  using nlohmann::json;
  json out = json::object();
  out["schema"] = 1;
  out["command"] = command;
  out["argv"] = argv;
  out["input"] = input;
  out["result"] = result;
  json certs = json::array();
  for (const auto& ev : evidence) {
    for (const auto& c : ev.certificates) {
      certs.push_back({{"subject", ev.subject},
                       {"name", c.name},
                       {"status", c.passed ? "pass" : "fail"},
                       {"witness", c.witness}});
    }
  }
  out["certificates"] = certs;
  out["citations"] = citations;
  out["notes"] = notes;
  out["status"] = exit_status_name(exit_code);
  out["exit_code"] = exit_code;
  if (!error.empty()) out["error"] = error;
  if (timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", elapsed_ms);
    out["timing"] = {{"elapsed_ms", buf}};
  }
  return out.dump(2) + "\n";
}

std::string Report::summary() const {
  std::ostringstream os;
  os << command << ": " << exit_status_name(exit_code) << "\n";
  if (!error.empty()) os << "  error: " << error << "\n";
  std::size_t passed = 0, total = 0;
  for (const auto& ev : evidence) {
    for (const auto& c : ev.certificates) {
      ++total;
      if (c.passed) ++passed;
      else os << "  FAILED " << ev.subject << ": " << c.name << " (" << c.witness << ")\n";
    }
  }
  if (total > 0) os << "  certificates: " << passed << "/" << total << " passed\n";
  for (const auto& n : notes) os << "  note: " << n << "\n";
  return os.str();
}

}  // namespace moduli::cli
