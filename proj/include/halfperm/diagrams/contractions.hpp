#pragma once

#include <utility>
#include <vector>

#include "halfperm/check.hpp"
#include "halfperm/diagrams/colored.hpp"

namespace halfperm {

// Lengths and colours of consecutive intervals on one circle.
struct Word {
  std::vector<int> lengths;
  std::vector<int> colors;
};

// |NC(X)|_c for intervals laid on a line, blocks monochromatic.
PolyC colored_nc_weight(const Word& w, int cap = kDefaultEnumerationCap);
// Sum over colour-respecting tau in NC(intervals) of prod_B p_B.
PolyC connection_pattern_sum(const Word& w, int cap = kDefaultEnumerationCap);

// Sum over u, v of prod p'_{m_r,u_r} p'_{n_s,v_s} |S_NC(u over x; v over y)|_c.
PolyC filtered_contraction(const Word& outer, const std::vector<int>& x, const Word& inner,
                           const std::vector<int>& y, int cap = kDefaultEnumerationCap);
// Same without filters: the limiting covariance of the two centred words.
PolyC word_covariance(const Word& outer, const Word& inner, int cap = kDefaultEnumerationCap);
// Spoke diagrams S_NC(m underlined; n underlined).
PolyC spoke_weight(const Word& outer, const Word& inner, int cap = kDefaultEnumerationCap);
// Centred word against Gamma_n of a single colour.
PolyC word_gamma_covariance(const Word& outer, int n, int color, int cap = kDefaultEnumerationCap);
// Gamma_m(X_i) against Gamma_n(X_j).
PolyC gamma_gamma_covariance(int m, int i, int n, int j, int cap = kDefaultEnumerationCap);

// (sum_k c^k p_{n,2k+1}, sum_{pi in NC(n)} #pi c^{#pi - 1}).
std::pair<PolyC, PolyC> lineardecomp_check(int n);

std::vector<Check> check_lemma17(int max_intervals = 3, int max_length = 3);
std::vector<Check> check_lemma18();
std::vector<Check> check_covariance_contractions();
std::vector<Check> check_spoke_weights(int max_size = 5);
std::vector<Check> check_lineardecomp(int max_n = 10);
// Restriction of coloured circular half-permutations to two or more intervals, total size <= max_total.
std::vector<Check> check_decomposition_theorem(int max_total = 8);

}  // namespace halfperm
