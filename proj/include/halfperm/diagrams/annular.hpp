#pragma once

#include <string>
#include <utility>
#include <vector>

#include "halfperm/diagrams/half_perm.hpp"

namespace halfperm {

// Non-crossing (m,n)-annular permutation: outer points 1..m, inner points m+1..m+n.
class AnnularPerm {
 public:
  AnnularPerm(int m, int n, Perm perm);

  int outer_size() const { return m_; }
  int inner_size() const { return n_; }
  const Perm& perm() const { return perm_; }
  Perm complement() const;
  bool is_through_block(const std::vector<int>& cycle) const;
  int through_block_count() const;

  friend bool operator==(const AnnularPerm& a, const AnnularPerm& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.perm_ == b.perm_;
  }
  friend bool operator<(const AnnularPerm& a, const AnnularPerm& b) { return a.perm_ < b.perm_; }
  std::string to_string() const { return perm_.to_string(); }

 private:
  int m_;
  int n_;
  Perm perm_;
};

// Connectivity plus #(pi) + #(gamma_{m,n} pi^{-1}) = m + n.
bool is_annular_noncrossing(int m, int n, const Perm& p);

// Outer and inner half-permutations; the inner one is relabelled to 1..n.
std::pair<CircularHalfPerm, CircularHalfPerm> cut(const AnnularPerm& a);

// The s-th gluing (1 <= s <= k) of two half-permutations with k open blocks each.
AnnularPerm reassemble(const CircularHalfPerm& outer, const CircularHalfPerm& inner, int s);

}  // namespace halfperm
