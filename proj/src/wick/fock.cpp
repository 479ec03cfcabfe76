#include "halfperm/wick/fock.hpp"

#include <stdexcept>

namespace halfperm {

FockSpace::FockSpace(TracialAlgebra algebra, int depth) : algebra_(std::move(algebra)), depth_(depth) {
  if (depth < 1) throw std::invalid_argument("Fock space depth must be at least 1");
  offsets_.push_back(0);
  long block = 1;
  for (int r = 0; r <= depth; ++r) {
    offsets_.push_back(offsets_.back() + static_cast<int>(block));
    block *= algebra_.dim();
  }
}

FockBatch FockSpace::vacuum() const {
  FockBatch v = FockBatch::Zero(dimension(), 1);
  v(0, 0) = 1;
  return v;
}

FockBatch FockSpace::tensor(const std::vector<Element>& word) const {
  const int n = static_cast<int>(word.size());
  if (n > depth_) throw std::invalid_argument("word exceeds Fock space depth");
  Eigen::VectorXcd t = Eigen::VectorXcd::Ones(1);
  for (const Element& d : word) {
    Eigen::VectorXcd next(t.size() * d.size());
    for (int a = 0; a < d.size(); ++a) next.segment(a * t.size(), t.size()) = d(a) * t;
    t = std::move(next);
  }
  // t has the last letter most significant; reverse the digit order.
  FockBatch v = FockBatch::Zero(dimension(), 1);
  const int dim = algebra_.dim();
  for (int idx = 0; idx < t.size(); ++idx) {
    int rest = idx, rev = 0;
    for (int i = 0; i < n; ++i) {
      rev = rev * dim + rest % dim;
      rest /= dim;
    }
    v(offsets_[n] + rev, 0) = t(idx);
  }
  return v;
}

int FockSpace::max_degree(const FockBatch& x, double tol) const {
  for (int r = depth_; r >= 0; --r)
    if (x.middleRows(offsets_[r], degree_size(r)).cwiseAbs().maxCoeff() > tol) return r;
  return -1;
}

FockBatch FockSpace::creation(const Element& d, const FockBatch& x, bool* truncated) const {
  FockBatch out = FockBatch::Zero(dimension(), x.cols());
  for (int r = 0; r < depth_; ++r) {
    const int size = degree_size(r);
    auto in = x.middleRows(offsets_[r], size);
    for (int a = 0; a < d.size(); ++a) out.middleRows(offsets_[r + 1] + a * size, size) = d(a) * in;
  }
  if (truncated && x.middleRows(offsets_[depth_], degree_size(depth_)).cwiseAbs().maxCoeff() > 0) *truncated = true;
  return out;
}

FockBatch FockSpace::annihilation(const Element& d, const FockBatch& x) const {
  // <e_b, d> = sum_a conj(d_a) H(b, a).
  const Eigen::VectorXcd w = algebra_.gram() * d.conjugate();
  FockBatch out = FockBatch::Zero(dimension(), x.cols());
  for (int r = 1; r <= depth_; ++r) {
    const int size = degree_size(r - 1);
    auto target = out.middleRows(offsets_[r - 1], size);
    for (int b = 0; b < w.size(); ++b) target += w(b) * x.middleRows(offsets_[r] + b * size, size);
  }
  return out;
}

FockBatch FockSpace::preservation(const Element& d, const FockBatch& x) const {
  const Eigen::MatrixXcd m = algebra_.left_multiplication(d);
  FockBatch out = FockBatch::Zero(dimension(), x.cols());
  for (int r = 1; r <= depth_; ++r) {
    const int size = degree_size(r - 1);
    for (int c = 0; c < m.rows(); ++c)
      for (int b = 0; b < m.cols(); ++b)
        if (m(c, b) != Complex(0))
          out.middleRows(offsets_[r] + c * size, size) += m(c, b) * x.middleRows(offsets_[r] + b * size, size);
  }
  return out;
}

FockBatch FockSpace::p(const Element& d, const FockBatch& x, bool* truncated) const {
  return creation(d, x, truncated) + annihilation(algebra_.star(d), x) + preservation(d, x) + algebra_.psi(d) * x;
}

Eigen::MatrixXcd FockSpace::inner(const FockBatch& x, const FockBatch& y) const {
  // <x, y> = y^H K^{(x)r} x per degree, K = H^T.
  const Eigen::MatrixXcd k = algebra_.gram().transpose();
  const int dim = algebra_.dim();
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Zero(x.cols(), y.cols());
  for (int r = 0; r <= depth_; ++r) {
    FockBatch kx = x.middleRows(offsets_[r], degree_size(r));
    // Apply K to each tensor factor in turn.
    for (int mode = 0; mode < r; ++mode) {
      int stride = 1;
      for (int i = mode + 1; i < r; ++i) stride *= dim;
      const int outer = degree_size(r) / (stride * dim);
      FockBatch next = FockBatch::Zero(kx.rows(), kx.cols());
      for (int o = 0; o < outer; ++o)
        for (int c = 0; c < dim; ++c)
          for (int a = 0; a < dim; ++a)
            if (k(c, a) != Complex(0))
              next.middleRows((o * dim + c) * stride, stride) += k(c, a) * kx.middleRows((o * dim + a) * stride, stride);
      kx = std::move(next);
    }
    result += (y.middleRows(offsets_[r], degree_size(r)).adjoint() * kx).transpose();
  }
  return result;
}

FockBatch FockSpace::basis_up_to(int max_degree) const {
  const int n = offsets_[max_degree + 1];
  FockBatch b = FockBatch::Zero(dimension(), n);
  for (int i = 0; i < n; ++i) b(i, i) = 1;
  return b;
}

FockBatch FockSpace::random_up_to(int max_degree, int count, std::mt19937_64& rng) const {
  std::normal_distribution<double> g(0.0, 1.0);
  FockBatch b = FockBatch::Zero(dimension(), count + 1);
  b(0, 0) = 1;
  for (int j = 1; j <= count; ++j)
    for (int i = 0; i < offsets_[max_degree + 1]; ++i) b(i, j) = Complex(g(rng), g(rng));
  return b;
}

}  // namespace halfperm
