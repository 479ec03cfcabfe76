#include "halfperm/wick/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace halfperm {

namespace {
constexpr double kAxiomTolerance = 1e-12;
}

TracialAlgebra::TracialAlgebra(std::string name, std::vector<Eigen::MatrixXd> left_mult, Eigen::MatrixXd star_table,
                               Eigen::VectorXd state, Eigen::VectorXd unit_vector)
    : name_(std::move(name)), left_mult_(std::move(left_mult)), star_(std::move(star_table)), psi_(std::move(state)),
      unit_(std::move(unit_vector)) {
  const int d = dim();
  if (d < 1 || static_cast<int>(left_mult_.size()) != d || star_.rows() != d || star_.cols() != d ||
      unit_.size() != d)
    throw std::invalid_argument("algebra: inconsistent structure sizes");
  for (const auto& m : left_mult_)
    if (m.rows() != d || m.cols() != d) throw std::invalid_argument("algebra: inconsistent structure sizes");
  gram_.resize(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) gram_(a, b) = psi(multiply(star(basis(b)), basis(a)));
  validate();
}

TracialAlgebra TracialAlgebra::scalars() {
  return TracialAlgebra("scalars", {Eigen::MatrixXd::Ones(1, 1)}, Eigen::MatrixXd::Ones(1, 1),
                        Eigen::VectorXd::Ones(1), Eigen::VectorXd::Ones(1));
}

TracialAlgebra TracialAlgebra::matrices(int k) {
  if (k < 1) throw std::invalid_argument("algebra: matrix size must be positive");
  const int d = k * k;
  std::vector<Eigen::MatrixXd> mult(d, Eigen::MatrixXd::Zero(d, d));
  Eigen::MatrixXd star = Eigen::MatrixXd::Zero(d, d);
  Eigen::VectorXd psi = Eigen::VectorXd::Zero(d), unit = Eigen::VectorXd::Zero(d);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      star(j * k + i, i * k + j) = 1;
      for (int l = 0; l < k; ++l) mult[i * k + j](i * k + l, j * k + l) = 1;  // e_ij e_jl = e_il
    }
  for (int i = 0; i < k; ++i) {
    psi(i * k + i) = 1.0 / k;
    unit(i * k + i) = 1;
  }
  return TracialAlgebra("M" + std::to_string(k), std::move(mult), std::move(star), std::move(psi), std::move(unit));
}

TracialAlgebra TracialAlgebra::diagonal(const std::vector<double>& weights) {
  const int d = static_cast<int>(weights.size());
  if (d < 1) throw std::invalid_argument("algebra: need at least one weight");
  std::vector<Eigen::MatrixXd> mult(d, Eigen::MatrixXd::Zero(d, d));
  for (int a = 0; a < d; ++a) mult[a](a, a) = 1;
  Eigen::VectorXd psi(d);
  for (int a = 0; a < d; ++a) {
    if (!(weights[a] > 0)) throw std::invalid_argument("algebra: state weights must be positive");
    psi(a) = weights[a];
  }
  return TracialAlgebra("C" + std::to_string(d), std::move(mult), Eigen::MatrixXd::Identity(d, d), std::move(psi),
                        Eigen::VectorXd::Ones(d));
}

Element TracialAlgebra::basis(int a) const {
  Element e = Element::Zero(dim());
  e(a) = 1;
  return e;
}

Eigen::MatrixXcd TracialAlgebra::left_multiplication(const Element& a) const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    if (a(i) != Complex(0)) m += a(i) * left_mult_[i].cast<Complex>();
  return m;
}

Element TracialAlgebra::multiply(const Element& a, const Element& b) const { return left_multiplication(a) * b; }

Element TracialAlgebra::star(const Element& a) const { return star_.cast<Complex>() * a.conjugate(); }

Complex TracialAlgebra::psi(const Element& a) const { return psi_.cast<Complex>().dot(a); }

Element TracialAlgebra::random_element(std::mt19937_64& rng) const {
  std::normal_distribution<double> g(0.0, 1.0);
  Element e(dim());
  for (int i = 0; i < dim(); ++i) e(i) = Complex(g(rng), g(rng));
  return e;
}

void TracialAlgebra::validate() const {
  const int d = dim();
  auto fail = [&](const std::string& what) { throw std::invalid_argument("algebra " + name_ + ": " + what); };
  if (std::abs(psi(unit()) - Complex(1)) > kAxiomTolerance) fail("psi(1) != 1");
  for (int a = 0; a < d; ++a) {
    if ((multiply(unit(), basis(a)) - basis(a)).norm() > kAxiomTolerance ||
        (multiply(basis(a), unit()) - basis(a)).norm() > kAxiomTolerance)
      fail("unit is not an identity");
    if ((star(star(basis(a))) - basis(a)).norm() > kAxiomTolerance) fail("star is not an involution");
    for (int b = 0; b < d; ++b) {
      Element ab = multiply(basis(a), basis(b));
      if (std::abs(psi(ab) - psi(multiply(basis(b), basis(a)))) > kAxiomTolerance) fail("state is not tracial");
      if ((star(ab) - multiply(star(basis(b)), star(basis(a)))).norm() > kAxiomTolerance)
        fail("star is not anti-multiplicative");
    }
  }
  std::mt19937_64 rng(0x5eedULL);
  for (int s = 0; s < 16; ++s) {
    Element x = random_element(rng);
    Complex v = psi(multiply(star(x), x));
    if (v.real() < -kAxiomTolerance || std::abs(v.imag()) > kAxiomTolerance * (1 + std::abs(v)))
      fail("state is not positive");
  }
}

}  // namespace halfperm
