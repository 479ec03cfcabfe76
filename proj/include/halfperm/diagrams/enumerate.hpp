#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "halfperm/diagrams/annular.hpp"
#include "halfperm/diagrams/half_perm.hpp"
#include "halfperm/poly/poly_c.hpp"

namespace halfperm {

inline constexpr int kDefaultEnumerationCap = 12;

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, int requested, int cap);
  int requested() const { return requested_; }
  int cap() const { return cap_; }

 private:
  int requested_;
  int cap_;
};

// Non-crossing permutations of [n], cycles increasing, sorted by image array.
std::vector<Perm> enum_nc(int n, int cap = kDefaultEnumerationCap);
// Non-crossing permutations whose cycles are monochromatic; colors[i] is the colour of point i+1.
std::vector<Perm> enum_nc_colored(const std::vector<int>& colors, int cap = kDefaultEnumerationCap);

std::vector<CircularHalfPerm> enum_ncc(int n, int k, int cap = kDefaultEnumerationCap);
std::vector<LinearHalfPerm> enum_ncl(int n, int k, int cap = kDefaultEnumerationCap);

std::vector<AnnularPerm> enum_snc(int m, int n, int cap = kDefaultEnumerationCap);
// Annular permutations with monochromatic cycles; colour vectors cover outer then inner points.
std::vector<AnnularPerm> enum_snc_colored(const std::vector<int>& outer_colors, const std::vector<int>& inner_colors,
                                          int cap = kDefaultEnumerationCap);

enum class Weight { AllBlocks, ClosedBlocks };

template <typename Range, typename Exponent>
PolyC weighted_count(const Range& diagrams, Exponent exponent) {
  std::vector<long> counts;
  for (const auto& d : diagrams) {
    int e = exponent(d);
    if (e < 0) continue;  // negative exponent excludes the diagram
    if (e >= static_cast<int>(counts.size())) counts.resize(e + 1, 0);
    ++counts[e];
  }
  std::vector<Rational> coeffs(counts.begin(), counts.end());
  return PolyC(std::move(coeffs));
}

PolyC weighted_count(const std::vector<Perm>& diagrams, Weight w);
PolyC weighted_count(const std::vector<AnnularPerm>& diagrams, Weight w);
PolyC weighted_count(const std::vector<CircularHalfPerm>& diagrams, Weight w);
PolyC weighted_count(const std::vector<LinearHalfPerm>& diagrams, Weight w);

}  // namespace halfperm
