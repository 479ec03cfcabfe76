#pragma once

#include <string>
#include <vector>

namespace halfperm {

// Permutation of {1..n} stored as its image array; composition is right to left.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  // (1, 2, ..., n)
  static Perm long_cycle(int n);
  // (1, ..., m)(m+1, ..., m+n)
  static Perm annular_long_cycle(int m, int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Perm inverse() const;
  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm& a, const Perm& b) { return a.images_ == b.images_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.images_ < b.images_; }

  // Cycles starting at their smallest point, ordered by that point.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;
  // #(pi) + #(gamma_n pi^{-1}) = n + 1.
  bool is_noncrossing() const;
  // Induced permutation on the points of `subset` (first return map), relabelled to 1..|subset| in increasing order.
  Perm induced(const std::vector<int>& subset) const;

  // Cycle notation "(1,2,3)(4)".
  std::string to_string() const;

 private:
  std::vector<int> images_;
};

// gamma_n pi^{-1}; requires pi non-crossing.
Perm kreweras(const Perm& p);

// Cycle of `p` containing i, starting at its smallest point.
std::vector<int> cycle_of(const Perm& p, int i);

std::string cycles_to_string(const std::vector<std::vector<int>>& cycles);

}  // namespace halfperm
