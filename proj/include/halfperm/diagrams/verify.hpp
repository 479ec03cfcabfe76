#pragma once

#include <vector>

#include "halfperm/check.hpp"

namespace halfperm {

// #pi + #pi^c = n + 1 on NC(n).
std::vector<Check> check_kreweras(int max_n = 10);
// Weighted NCC(n)_k against Gamma-tilde^{-1} and NCL(n)_k against Pi^{-1}.
std::vector<Check> check_oracles(int max_circular = 8, int max_linear = 10);
// Dot encoding is a bijection NCC(n)_k -> union_j D_{j,k,n}, |D_{j,k,n}| = C(n,j) C(n,j+k).
std::vector<Check> check_dot_bijections(int max_n = 8);
// Every pair of halves with k open blocks glues in exactly k ways, covering S_NC(m,n) once.
std::vector<Check> check_cut_reassemble(int max_total = 10);

}  // namespace halfperm
