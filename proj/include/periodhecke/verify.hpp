#pragma once

// Named self-check suites shared by the CLI `verify` command and the test
// binaries. Every check records what was compared so a failure is readable
// without rerunning anything.

#include "periodhecke/format.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace periodhecke {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
  std::size_t failures() const;
};

struct SuiteOptions {
  int max_weight = 40;          // theorem14
  int max_basis_w = 60;         // bases
  std::size_t samples = 200;    // symmetry
  std::uint64_t seed = 0x5eed2024;
};

/// paper-examples, hankel, bases, theorem14, oracle, symmetry, assembly, relations.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgumentError for an unknown suite name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

Json report_json(const SuiteReport& report);
std::string report_text(const SuiteReport& report);

}  // namespace periodhecke
