#pragma once

#include <string>
#include <vector>

namespace holosqueeze {

struct VerifyConfig {
  double hbar = 1.0;
  double mass = 1.0;
  int wigner_order = 48;
  int truncation = 20;
};

/// One invariant: passes when `value` <= `tolerance`.
struct CheckResult {
  std::string suite;
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

/// hermite, basis, states, phase_space, model, all.
const std::vector<std::string>& verify_suite_names();

/// Throws std::invalid_argument for an unknown suite name.
VerifyReport run_verify(const std::string& suite, const VerifyConfig& config = {});

}  // namespace holosqueeze
