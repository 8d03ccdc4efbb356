#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gdc {

struct Check {
  std::string claim;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::vector<Check> checks;
  bool passed() const;
};

inline constexpr std::uint64_t kDefaultVerifySeed = 20240601;

// kernel-table, witnesses, n3-roundtrip, domination-oracle, domination-formulas, couplings,
// chains, exchangeable, counterexamples, samplers, trivial-iid; "all" runs every suite.
std::vector<std::string> suite_names();
bool is_suite(const std::string& name);
std::vector<SuiteReport> run_suite(const std::string& name, std::uint64_t seed = kDefaultVerifySeed,
                                   int jobs = 1);

}  // namespace gdc
