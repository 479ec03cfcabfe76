#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace halfperm {

// One verified identity instance. residual is NaN for exact comparisons.
struct Check {
  std::string identity;
  std::string instance;
  bool pass = false;
  std::string detail;
  double residual = std::nan("");
};

inline bool all_pass(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

inline void append(std::vector<Check>& into, const std::vector<Check>& more) {
  into.insert(into.end(), more.begin(), more.end());
}

}  // namespace halfperm
