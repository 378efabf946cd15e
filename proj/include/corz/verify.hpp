#pragma once

#include <string>
#include <vector>

namespace corz {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCheck> checks;

  bool passed() const;
  /// {"suite": ..., "passed": bool, "checks": [{"name", "passed", "detail"}, ...]}
  std::string to_json() const;
};

struct VerifyOptions {
  int jobs = 1;
};

/// Suite names accepted by verify().
const std::vector<std::string>& verify_suites();

/// Runs one named suite. Throws std::invalid_argument listing the available
/// suites when the name is unknown.
VerifyReport verify(const std::string& suite, const VerifyOptions& opts = {});

}  // namespace corz
