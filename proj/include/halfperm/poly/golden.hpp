#pragma once

#include <vector>

#include "halfperm/check.hpp"
#include "halfperm/poly/families.hpp"
#include "halfperm/poly/transition_matrix.hpp"

namespace halfperm {

// First five rows of the inverse transition matrix, as printed; row n holds entries k = 0..n.
std::vector<std::vector<PolyC>> golden_inverse_rows(Family f);
// The printed Gamma-tilde_0..Gamma-tilde_3, coefficients in x ascending.
std::vector<PolyXC> golden_gamma_tilde();

// Compares invert_unitriangular(transition_matrix(f, rows)) with the printed rows, rows <= 5.
std::vector<Check> check_golden_inverse(Family f, int rows = 5);
// Printed Gamma-tilde polynomials against the recurrence.
std::vector<Check> check_golden_forward(int rows = 4);
std::vector<Check> check_golden_tables();

}  // namespace halfperm
