#pragma once

#include <vector>

#include "halfperm/check.hpp"

namespace halfperm {

// Coefficient recursions of the forward and inverse matrices, the
// Gamma/Pi relation, centering, norms and double inversion, for rows < size.
std::vector<Check> check_polynomial_identities(int size);

// Generating-function identities up to z^order.
std::vector<Check> check_series_identities(int order);

}  // namespace halfperm
