#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

#include "halfperm/poly/families.hpp"

namespace halfperm {

using PolyMatrix = Eigen::Matrix<PolyC, Eigen::Dynamic, Eigen::Dynamic>;

// Inverse of a lower-unitriangular matrix by forward substitution, for any scalar type.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> invert_unit_lower(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("matrix not square");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(m(i, i) == Scalar(1))) throw std::invalid_argument("diagonal entry is not 1");
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (!(m(i, j) == Scalar(0))) throw std::invalid_argument("matrix not lower triangular");
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> inv(n, n);
  inv.setZero();
  for (Eigen::Index k = 0; k < n; ++k) {
    inv(k, k) = Scalar(1);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      Scalar acc(0);
      for (Eigen::Index j = k; j < i; ++j) acc = acc + m(i, j) * inv(j, k);
      inv(i, k) = -acc;
    }
  }
  return inv;
}

// Exact product of lower-triangular matrices; skips the structural zeros.
PolyMatrix lower_product(const PolyMatrix& a, const PolyMatrix& b);

class TransitionMatrix {
 public:
  explicit TransitionMatrix(PolyMatrix entries);

  static TransitionMatrix identity(int size);

  int size() const { return static_cast<int>(entries_.rows()); }
  const PolyC& operator()(int n, int k) const { return entries_(n, k); }
  std::vector<PolyC> row(int n) const;
  std::vector<PolyC> column(int k) const;
  const PolyMatrix& matrix() const { return entries_; }

  bool is_unit_lower_triangular() const;
  bool is_identity() const;
  bool is_integral() const;

  friend TransitionMatrix operator*(const TransitionMatrix& a, const TransitionMatrix& b);
  friend bool operator==(const TransitionMatrix& a, const TransitionMatrix& b);

  std::string to_csv() const;
  std::string to_text() const;

 private:
  PolyMatrix entries_;
};

TransitionMatrix transition_matrix(Family family, int size);
TransitionMatrix invert_unitriangular(const TransitionMatrix& m);

// Table size used when nothing else is configured.
inline constexpr int kDefaultTableSize = 16;

}  // namespace halfperm
