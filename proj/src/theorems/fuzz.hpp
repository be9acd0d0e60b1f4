#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "petals/petals.hpp"
#include "report/json_report.hpp"
#include "rootlab/roots.hpp"

namespace rzlab {

struct FuzzConfig {
  std::uint64_t seed = 7;
  int trials = 0;  // 0 selects the suite's default
  RootSolveOptions solve;
  int max_bits = 512;
  OrbitCaps caps;
  // Number of petals-suite maps whose critical orbits are iterated for
  // the population diagnostic.
  int population_maps = 6;
  bool include_roots = false;
};

struct FuzzResult {
  std::string suite;
  int instances = 0;
  int violations = 0;
  // Instances whose counts could not be resolved numerically within
  // max_bits; neither passes nor violations.
  int unresolved = 0;
  Json report;
};

// Suites: thm_rat, thm4pol, thm9_rat, cor_crat, cor1, oracle, census,
// petals, negative_controls, and all (every suite in that order).
const std::vector<std::string>& fuzz_suites();
int default_trials(const std::string& suite);

// Throws DomainError for an unknown suite name.
FuzzResult run_fuzz(const std::string& suite, const FuzzConfig& config);

}  // namespace rzlab
