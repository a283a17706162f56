#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lielat {

struct SelftestCheck {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string first_failure;
};

/// Randomized property suites at reduced trial counts.
std::vector<SelftestCheck> run_selftest(std::uint64_t seed, int trials);

}  // namespace lielat
