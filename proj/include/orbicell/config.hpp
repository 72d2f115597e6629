#pragma once

#include <cstdint>

namespace orbicell {

// Budgets and knobs shared across the tool; flags only, no environment.
struct RunConfig {
  int max_group_order = 48;
  long long gauge_budget = 1000000;  // equivalence search nodes
  long long coset_steps = 100000;
  int max_path_length = 32;
  long long hom_budget = 1000000;
  std::uint64_t seed = 0;
  bool json_output = false;
};

}  // namespace orbicell
