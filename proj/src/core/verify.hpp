#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/base.hpp"

namespace hk {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  int passed_count() const;
};

// n, q, trials: 0 picks the suite default.  max_n bounds every enumeration.
struct VerifyConfig {
  int n = 0;
  int64_t q = 0;
  int trials = 0;
  uint64_t seed = 1;
  int max_n = kDefaultMaxN;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs one named suite.  Throws ArgumentError for an unknown name or bad
// parameters, SizeLimitError past the caps; verification failures are
// reported in the result, not thrown.
SuiteResult run_suite(const std::string& name, const VerifyConfig& cfg);

}  // namespace hk
