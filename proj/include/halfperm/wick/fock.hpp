#pragma once

#include <random>
#include <vector>

#include "halfperm/wick/algebra.hpp"

namespace halfperm {

// Columns are vectors of the truncated Fock space, degree blocks 0..L laid end to end;
// the degree-r block is indexed by words (a_1, ..., a_r) with a_1 most significant.
using FockBatch = Eigen::MatrixXcd;

// Full Fock space over the GNS space of the algebra, truncated at tensor degree L.
// An operator raising degree by at most g is exact on inputs of degree <= L - g.
class FockSpace {
 public:
  FockSpace(TracialAlgebra algebra, int depth);

  const TracialAlgebra& algebra() const { return algebra_; }
  int depth() const { return depth_; }
  int dimension() const { return offsets_.back(); }
  int offset(int degree) const { return offsets_[degree]; }
  int degree_size(int degree) const { return offsets_[degree + 1] - offsets_[degree]; }

  FockBatch vacuum() const;
  // d_1 (x) ... (x) d_n as one column.
  FockBatch tensor(const std::vector<Element>& word) const;
  // Highest degree carrying a coefficient above tol in any column (-1 for zero).
  int max_degree(const FockBatch& x, double tol = 0.0) const;

  // l(d); content pushed past degree L is dropped and reported through `truncated`.
  FockBatch creation(const Element& d, const FockBatch& x, bool* truncated = nullptr) const;
  // l^*(d)(d_1 (x) rest) = <d_1, d> rest; kills the vacuum.
  FockBatch annihilation(const Element& d, const FockBatch& x) const;
  // Lambda(d)(d_1 (x) rest) = (d d_1) (x) rest; kills the vacuum.
  FockBatch preservation(const Element& d, const FockBatch& x) const;
  // p(d) = l(d) + l^*(d^*) + Lambda(d) + psi(d) 1.
  FockBatch p(const Element& d, const FockBatch& x, bool* truncated = nullptr) const;

  // result(i, j) = <x_i, y_j>, linear in x.
  Eigen::MatrixXcd inner(const FockBatch& x, const FockBatch& y) const;

  // Standard basis vectors of all degrees <= max_degree.
  FockBatch basis_up_to(int max_degree) const;
  // Vacuum plus `count` Gaussian vectors supported in degrees <= max_degree.
  FockBatch random_up_to(int max_degree, int count, std::mt19937_64& rng) const;

 private:
  TracialAlgebra algebra_;
  int depth_;
  std::vector<int> offsets_;
};

}  // namespace halfperm
