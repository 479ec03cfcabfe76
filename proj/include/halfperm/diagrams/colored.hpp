#pragma once

#include <optional>
#include <vector>

#include "halfperm/diagrams/annular.hpp"
#include "halfperm/diagrams/enumerate.hpp"

namespace halfperm {

// Coloured intervals on the two circles, with optional per-interval through-block counts.
struct ColoredAnnularSpec {
  std::vector<int> outer_lengths, outer_colors;
  std::vector<int> inner_lengths, inner_colors;
  std::optional<std::vector<int>> outer_through, inner_through;

  int outer_size() const;
  int inner_size() const;
  // Positive lengths, cyclically alternating colours, filters sized to the intervals.
  void validate() const;
};

// Number of distinct through-blocks meeting each interval.
std::vector<int> through_counts(const AnnularPerm& a, const std::vector<int>& lengths, bool outer);

std::vector<AnnularPerm> enum_colored_snc(const ColoredAnnularSpec& spec, int cap = kDefaultEnumerationCap);

// Weighted count c^{#pi}; zero-length intervals are allowed and have zero through-blocks.
PolyC colored_weight(const ColoredAnnularSpec& spec, int cap = kDefaultEnumerationCap);

// Point colours of intervals laid end to end.
std::vector<int> expand_colors(const std::vector<int>& lengths, const std::vector<int>& colors);

// Circular half-permutations of the coloured circle with monochromatic blocks in which every
// interval meets an open block.
std::vector<CircularHalfPerm> enum_colored_ncc(const std::vector<int>& lengths, const std::vector<int>& colors,
                                               int cap = kDefaultEnumerationCap);

// Restriction of such a half-permutation to interval r, relabelled so the interval starts at 1.
LinearHalfPerm restrict_to_interval(const CircularHalfPerm& h, const std::vector<int>& lengths, int r);

}  // namespace halfperm
