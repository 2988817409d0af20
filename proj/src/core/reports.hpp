#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/composition.hpp"
#include "core/module.hpp"
#include "core/verify.hpp"

namespace hk {

enum class ReportFormat { pretty, json, csv };

ReportFormat parse_format(const std::string& s);
CharMode parse_mode(const std::string& s);

struct ReportOptions {
  ReportFormat format = ReportFormat::pretty;
  int max_n = kDefaultMaxN;
  uint64_t seed = 1;
};

// Descent class numbers for one class (alpha_parts nonempty) or for every
// class of n; q > 0 adds the (q,t) layer at that prime power.
std::string ribbon_report(int n, const std::vector<int>& alpha_parts, int64_t q,
                          const ReportOptions& opt);

// Characteristic of a named module.
//   regular --n          coinvariant --n        projective --alpha
//   simple --alpha       springer --mu (hook)   flag --n --q
// Modes beyond what the module's structure supports raise UnavailableError.
std::string characteristic_report(const std::string& module, int n,
                                  const std::vector<int>& alpha_parts,
                                  const std::vector<int>& mu_parts, int64_t q,
                                  CharMode mode, const ReportOptions& opt);

std::string verify_report(const SuiteResult& r, const ReportOptions& opt);

uint64_t fnv1a64(const std::string& s);

}  // namespace hk
