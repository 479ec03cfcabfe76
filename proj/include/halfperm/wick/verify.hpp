#pragma once

#include <cstdint>
#include <vector>

#include "halfperm/check.hpp"
#include "halfperm/wick/fock.hpp"

namespace halfperm {

// Relative tolerance for the operator identities.
inline constexpr double kWickTolerance = 1e-9;

struct WickConfig {
  int depth = 5;
  int max_word = 3;
  int random_vectors = 3;
  std::uint64_t seed = 20240607;
};

// Residual ||a - b|| / max(1, ||a||, ||b||).
double relative_residual(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// W(word) Omega = word, W(d) = p(d) - psi(d), and <p(d)x, y> = <x, p(d^*)y>.
std::vector<Check> check_wick_basics(const FockSpace& space, const WickConfig& cfg);
// W(word)^* = W(reversed starred word), as Gram-adjoint matrices on the exact subspace.
std::vector<Check> check_wick_adjoints(const FockSpace& space, const WickConfig& cfg);
// Part (b) for n <= depth - 1; part (a) for n <= depth - 2 and its four-way split as a bijection.
std::vector<Check> check_wick_decomposition(const FockSpace& space, const WickConfig& cfg);
// W_pi W_sigma = W_{pi * sigma} over all pairs with word lengths <= max_word and k_pi + k_sigma < depth.
std::vector<Check> check_wick_product(const FockSpace& space, const WickConfig& cfg);
// Worked instances: the W_pi example, the concatenation example, and the two-by-two convolution.
std::vector<Check> check_wick_examples(const FockSpace& space, const WickConfig& cfg);

// prepend_extensions over NCL(n) hits every element of NCL(n+1) exactly once.
std::vector<Check> check_split_bijection(int max_n = 6);

// All of the above over scalars, 2x2 matrices and C^3.
std::vector<Check> wick_suite(const WickConfig& cfg);

}  // namespace halfperm
