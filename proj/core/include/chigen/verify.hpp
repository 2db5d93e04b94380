#pragma once

#include <string>
#include <vector>

#include "chigen/sectors.hpp"

namespace chigen {

// Self-verification suites: each re-derives part of the pipeline along an
// independent route and compares exactly. All comparisons are on exact
// rationals; there are no tolerances.
struct SuiteResult {
  std::string name;
  bool passed;
  std::string detail;  // counterexample coefficient on failure
};

const std::vector<std::string>& verify_suite_names();

// Runs one suite by name. The sector table is injectable so fault-injection
// tests can corrupt it.
SuiteResult run_verify_suite(const std::string& name,
                             const SectorTable& sectors = SectorTable::standard());

std::vector<SuiteResult> run_verify(
    const std::vector<std::string>& suites = {},
    const SectorTable& sectors = SectorTable::standard());

}  // namespace chigen
