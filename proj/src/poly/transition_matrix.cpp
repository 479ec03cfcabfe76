#include "halfperm/poly/transition_matrix.hpp"

#include <sstream>

namespace halfperm {

PolyMatrix lower_product(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch");
  PolyMatrix out(a.rows(), b.cols());
  out.setZero();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k <= std::min<Eigen::Index>(i, b.cols() - 1); ++k) {
      PolyC acc;
      for (Eigen::Index j = k; j <= i; ++j) acc += a(i, j) * b(j, k);
      out(i, k) = acc;
    }
  return out;
}

TransitionMatrix::TransitionMatrix(PolyMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 1 || entries_.rows() != entries_.cols())
    throw std::invalid_argument("transition matrix must be square and non-empty");
  for (Eigen::Index i = 0; i < entries_.rows(); ++i)
    for (Eigen::Index j = i + 1; j < entries_.cols(); ++j)
      if (!entries_(i, j).is_zero()) throw std::invalid_argument("transition matrix must be lower triangular");
}

TransitionMatrix TransitionMatrix::identity(int size) {
  PolyMatrix m(size, size);
  m.setZero();
  for (int i = 0; i < size; ++i) m(i, i) = PolyC(1);
  return TransitionMatrix(std::move(m));
}

std::vector<PolyC> TransitionMatrix::row(int n) const {
  std::vector<PolyC> out;
  for (int k = 0; k <= n; ++k) out.push_back(entries_(n, k));
  return out;
}

std::vector<PolyC> TransitionMatrix::column(int k) const {
  std::vector<PolyC> out;
  for (int n = 0; n < size(); ++n) out.push_back(entries_(n, k));
  return out;
}

bool TransitionMatrix::is_unit_lower_triangular() const {
  for (int i = 0; i < size(); ++i)
    if (entries_(i, i) != PolyC(1)) return false;
  return true;
}

bool TransitionMatrix::is_identity() const { return *this == identity(size()); }

bool TransitionMatrix::is_integral() const {
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j <= i; ++j)
      if (!entries_(i, j).is_integral()) return false;
  return true;
}

TransitionMatrix operator*(const TransitionMatrix& a, const TransitionMatrix& b) {
  return TransitionMatrix(lower_product(a.entries_, b.entries_));
}

bool operator==(const TransitionMatrix& a, const TransitionMatrix& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j <= i; ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

std::string TransitionMatrix::to_csv() const {
  std::ostringstream os;
  os << "n";
  for (int k = 0; k < size(); ++k) os << ",k" << k;
  os << "\n";
  for (int n = 0; n < size(); ++n) {
    os << n;
    for (int k = 0; k < size(); ++k) os << ",\"" << (k <= n ? entries_(n, k).to_string() : "") << "\"";
    os << "\n";
  }
  return os.str();
}

std::string TransitionMatrix::to_text() const {
  std::ostringstream os;
  for (int n = 0; n < size(); ++n) {
    os << "row " << n << ":";
    for (int k = 0; k <= n; ++k) os << (k ? " | " : " ") << entries_(n, k).to_string();
    os << "\n";
  }
  return os.str();
}

TransitionMatrix transition_matrix(Family family, int size) {
  if (size < 1) throw std::invalid_argument("size must be positive");
  auto members = family_members(family, size);
  PolyMatrix m(size, size);
  m.setZero();
  for (int n = 0; n < size; ++n)
    for (int k = 0; k <= n; ++k) m(n, k) = members[n][k];
  return TransitionMatrix(std::move(m));
}

TransitionMatrix invert_unitriangular(const TransitionMatrix& m) {
  return TransitionMatrix(invert_unit_lower(m.matrix()));
}

}  // namespace halfperm
