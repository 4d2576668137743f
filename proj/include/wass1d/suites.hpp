#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wass1d/report.hpp"

namespace wass1d {

struct SuiteInfo {
  std::string id;
  std::string description;
  int default_trials;
};

const std::vector<SuiteInfo>& suite_catalog();
bool has_suite(const std::string& id);

// Runs a registered suite; trials <= 0 selects the suite's default. The
// result depends only on (id, trials, seed). Unknown ids throw UnknownSuite.
std::vector<VerificationReport> run_suite(const std::string& id, int trials, std::uint64_t seed);

}  // namespace wass1d
