/**
 * @file suites.hpp
 * @brief Named property batteries run by `projstar verify`.
 *
 * Each suite covers the invariants of one module: `core`, `bianchi`
 * (geometry), `lift` (ambient), `multilinear`, `star-symmetry` (starprod)
 * and `cmz` (onedim).
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace projstar {

struct SuiteConfig {
  int n = 2;
  std::uint64_t seed = 1;
  int maxdeg = 2;  ///< coefficient degree of random inputs
  int cases = 6;   ///< random cases per check
};

struct CheckResult {
  std::string name;
  bool holds = false;
  int cases = 0;
  std::string detail;  ///< first failing case, empty on success
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

std::vector<std::string> suite_names();
/// Throws DomainError for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace projstar
