#pragma once

#include <string>
#include <vector>

#include "halfperm/poly/poly_xc.hpp"

namespace halfperm {

enum class Family { GammaTilde, Gamma, Pi };

std::string family_name(Family f);
Family parse_family(const std::string& name);

PolyXC chebyshev_C(int n);
PolyXC chebyshev_S(int n);

// d_0 = -1, d_1 = 1, d_n = (-1)^n (c - 1) for n > 1.
PolyC d_constant(int n);

PolyXC gamma_tilde(int n);
// Gamma_0 = 1; Gamma_n = gamma_tilde(n) + d_n for n >= 1.
PolyXC gamma(int n);
PolyXC pi_poly(int n);

// Members 0..count-1, sharing one recurrence pass.
std::vector<PolyXC> family_members(Family f, int count);

}  // namespace halfperm
