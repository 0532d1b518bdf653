#pragma once

#include <string>
#include <utility>
#include <vector>

namespace moduli {

/// One checked claim. The witness is a human-readable trace of what was
/// compared (a cofactor, a determinant, the failing cross-product).
struct Certificate {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct Evidence {
  std::string subject;
  std::vector<Certificate> certificates;

  void add(std::string name, bool passed, std::string witness = {}) {
    certificates.push_back({std::move(name), passed, std::move(witness)});
  }
  bool all_passed() const {
    for (const auto& c : certificates)
      if (!c.passed) return false;
    return true;
  }
  /// The first failed certificate's name, or empty.
  std::string first_failure() const {
    for (const auto& c : certificates)
      if (!c.passed) return c.name;
    return {};
  }
  void append(const Evidence& other) {
    certificates.insert(certificates.end(), other.certificates.begin(), other.certificates.end());
  }
};

}  // namespace moduli
