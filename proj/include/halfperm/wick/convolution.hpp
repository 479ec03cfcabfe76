#pragma once

#include <vector>

#include "halfperm/diagrams/half_perm.hpp"

namespace halfperm {

// pi on [m] followed by sigma on [m+1, m+n].
LinearHalfPerm concatenate(const LinearHalfPerm& pi, const LinearHalfPerm& sigma);

// pi v_0 sigma, then for r = 1..min(j,k) the r-th innermost pair of facing open blocks joined,
// first open and then closed (later joins build on the closed one). Size 2 min(j,k) + 1.
std::vector<LinearHalfPerm> convolution(const LinearHalfPerm& pi, const LinearHalfPerm& sigma);

// The four extensions of pi to {0} u [n] (0 relabelled 1): open singleton at 0; 0 joined to the
// first open block, closed; joined and left open; closed singleton at 0. The middle two need k >= 1.
std::vector<LinearHalfPerm> prepend_extensions(const LinearHalfPerm& pi);

}  // namespace halfperm
