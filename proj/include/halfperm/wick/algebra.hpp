#pragma once

#include <complex>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace halfperm {

using Complex = std::complex<double>;
using Element = Eigen::VectorXcd;

// Finite-dimensional unital *-algebra with a tracial state, in a real basis e_0..e_{D-1}.
class TracialAlgebra {
 public:
  // left_mult[a](c, b) is the coefficient of e_c in e_a e_b; star(:, a) is e_a^*.
  TracialAlgebra(std::string name, std::vector<Eigen::MatrixXd> left_mult, Eigen::MatrixXd star,
                 Eigen::VectorXd psi, Eigen::VectorXd unit);

  static TracialAlgebra scalars();
  // k x k matrices with the normalized trace; e_{ij} has index i*k + j.
  static TracialAlgebra matrices(int k);
  // C^D with minimal idempotents as basis and state given by positive weights summing to 1.
  static TracialAlgebra diagonal(const std::vector<double>& weights);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(psi_.size()); }

  Element multiply(const Element& a, const Element& b) const;
  // Matrix of b -> a b.
  Eigen::MatrixXcd left_multiplication(const Element& a) const;
  Element star(const Element& a) const;
  Complex psi(const Element& a) const;
  Element unit() const { return unit_.cast<Complex>(); }
  Element basis(int a) const;
  // H(a, b) = <e_a, e_b> = psi(e_b^* e_a).
  const Eigen::MatrixXcd& gram() const { return gram_; }

  Element random_element(std::mt19937_64& rng) const;

 private:
  void validate() const;

  std::string name_;
  std::vector<Eigen::MatrixXd> left_mult_;
  Eigen::MatrixXd star_;
  Eigen::VectorXd psi_;
  Eigen::VectorXd unit_;
  Eigen::MatrixXcd gram_;
};

}  // namespace halfperm
