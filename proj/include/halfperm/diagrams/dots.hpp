#pragma once

#include <string>
#include <vector>

#include "halfperm/diagrams/half_perm.hpp"

namespace halfperm {

enum class Dot : unsigned char { Black, White };

// Dots on 1, 1', 2, 2', ..., n, n' placed clockwise.
struct DotStructure {
  int n = 0;
  std::vector<Dot> unprimed;
  std::vector<Dot> primed;

  int black_primed() const;
  int white_unprimed() const;
  // Membership in D_{j,k,n}: j black primed dots, j + k white unprimed dots.
  int j() const { return black_primed(); }
  int k() const { return white_unprimed() - black_primed(); }
  bool well_formed() const;

  // "WWBWBW/BWWWBW": unprimed dots, then primed dots.
  std::string to_string() const;
  static DotStructure parse(const std::string& s);

  friend bool operator==(const DotStructure& a, const DotStructure& b) {
    return a.n == b.n && a.unprimed == b.unprimed && a.primed == b.primed;
  }
  friend bool operator<(const DotStructure& a, const DotStructure& b) {
    return a.unprimed == b.unprimed ? a.primed < b.primed : a.unprimed < b.unprimed;
  }
};

DotStructure dot_encode(const CircularHalfPerm& h);
CircularHalfPerm dot_decode(const DotStructure& d);

// All of D_{j,k,n}.
std::vector<DotStructure> enumerate_dot_structures(int n, int j, int k);

}  // namespace halfperm
