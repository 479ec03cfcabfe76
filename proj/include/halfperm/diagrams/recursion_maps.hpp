#pragma once

#include <vector>

#include "halfperm/check.hpp"
#include "halfperm/diagrams/half_perm.hpp"

namespace halfperm {

// Class 1..4 by the dots on n+1 and (n+1)': WW, BW, WB, BB.
struct CircularStep {
  int klass;
  CircularHalfPerm image;
};
// Requires size >= 2.
CircularStep circular_recursion_step(const CircularHalfPerm& h);

// Class 1..4 by the block of n+1: open singleton, open, closed singleton, closed.
struct LinearStep {
  int klass;
  LinearHalfPerm image;
};
LinearStep linear_recursion_step(const LinearHalfPerm& h);

// Per-element bookkeeping, bijectivity of each class map, and the aggregate recursions, for n + 1 <= max_n.
std::vector<Check> check_circular_recursion(int max_n);
std::vector<Check> check_linear_recursion(int max_n);

}  // namespace halfperm
