#pragma once

#include <string>
#include <vector>

#include "halfperm/diagrams/perm.hpp"

namespace halfperm {

enum class Designation { None, InPerm, InComplement };

// Element of NCC(n)_k. For k >= 1 the reference block is the complement cycle met by
// every open block; for k = 0 it is the designated block (of pi or of its complement).
class CircularHalfPerm {
 public:
  static CircularHalfPerm with_open_blocks(Perm pi, std::vector<int> complement_block,
                                           const std::vector<int>& open_points);
  static CircularHalfPerm with_designated(Perm pi, Designation where, std::vector<int> block);

  int size() const { return pi_.size(); }
  int open_count() const { return static_cast<int>(open_initials_.size()); }
  int closed_count() const;
  // Exponent of c in the weight: closed blocks for k >= 1, #pi or #pi - 1 for k = 0.
  int weight_exponent() const { return closed_count(); }

  const Perm& perm() const { return pi_; }
  Designation designation() const { return designation_; }
  // Sorted points of the complement cycle (k >= 1) or of the designated block (k = 0).
  const std::vector<int>& reference_block() const { return reference_; }

  // Open blocks in cyclic order, starting from the smallest initial point.
  std::vector<std::vector<int>> open_blocks() const;
  const std::vector<int>& open_initial_points() const { return open_initials_; }
  bool is_open(int point) const;
  bool is_designated(int point) const;

  // Initial point of the block containing `point`, relative to the reference block.
  int initial_point(int point) const;
  int final_point(int point) const { return pi_.inverse()(initial_point(point)); }

  friend bool operator==(const CircularHalfPerm& a, const CircularHalfPerm& b);
  friend bool operator<(const CircularHalfPerm& a, const CircularHalfPerm& b);

  // "(1,2,3)(4) open {(1,2,3)} ref {1,4}" style rendering.
  std::string to_string() const;

 private:
  CircularHalfPerm() = default;
  Perm pi_;
  std::vector<int> reference_;
  Designation designation_ = Designation::None;
  std::vector<int> open_initials_;
};

// Element of NCL(n)_k: the complement cycle through 1 meets every open block.
class LinearHalfPerm {
 public:
  LinearHalfPerm(Perm pi, const std::vector<int>& open_points);

  int size() const { return pi_.size(); }
  int open_count() const { return static_cast<int>(open_mins_.size()); }
  int closed_count() const { return pi_.cycle_count() - open_count(); }
  const Perm& perm() const { return pi_; }
  bool is_open(int point) const;

  // Open blocks ordered left to right by smallest element.
  std::vector<std::vector<int>> open_blocks() const;
  std::vector<std::vector<int>> closed_blocks() const;
  // Requires k >= 1.
  CircularHalfPerm as_circular() const;

  friend bool operator==(const LinearHalfPerm& a, const LinearHalfPerm& b) {
    return a.pi_ == b.pi_ && a.open_mins_ == b.open_mins_;
  }
  friend bool operator<(const LinearHalfPerm& a, const LinearHalfPerm& b) {
    return a.pi_ == b.pi_ ? a.open_mins_ < b.open_mins_ : a.pi_ < b.pi_;
  }

  std::string to_string() const;

 private:
  Perm pi_;
  std::vector<int> open_mins_;
};

}  // namespace halfperm
