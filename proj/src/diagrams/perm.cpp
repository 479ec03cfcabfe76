#include "halfperm/diagrams/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace halfperm {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("image array is not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Perm(std::move(im));
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(n, 0);
  for (const auto& cyc : cycles)
    for (size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      if (a < 1 || a > n || im[a - 1] != 0) throw std::invalid_argument("invalid cycle list");
      im[a - 1] = b;
    }
  for (int i = 0; i < n; ++i)
    if (im[i] == 0) im[i] = i + 1;
  return Perm(std::move(im));
}

Perm Perm::long_cycle(int n) {
  std::vector<int> im(n);
  for (int i = 0; i < n; ++i) im[i] = (i + 1) % n + 1;
  return Perm(std::move(im));
}

Perm Perm::annular_long_cycle(int m, int n) {
  std::vector<int> im(m + n);
  for (int i = 0; i < m; ++i) im[i] = (i + 1) % m + 1;
  for (int i = 0; i < n; ++i) im[m + i] = m + (i + 1) % n + 1;
  return Perm(std::move(im));
}

Perm Perm::inverse() const {
  std::vector<int> inv(size());
  for (int i = 0; i < size(); ++i) inv[images_[i] - 1] = i + 1;
  return Perm(std::move(inv));
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch in composition");
  std::vector<int> im(a.size());
  for (int i = 0; i < a.size(); ++i) im[i] = a.images_[b.images_[i] - 1];
  return Perm(std::move(im));
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(size() + 1, 0);
  for (int i = 1; i <= size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = (*this)(j)) {
      seen[j] = 1;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

int Perm::cycle_count() const {
  int count = 0;
  std::vector<char> seen(size() + 1, 0);
  for (int i = 1; i <= size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (int j = i; !seen[j]; j = (*this)(j)) seen[j] = 1;
  }
  return count;
}

bool Perm::is_noncrossing() const {
  if (size() == 0) return true;
  return cycle_count() + (long_cycle(size()) * inverse()).cycle_count() == size() + 1;
}

Perm Perm::induced(const std::vector<int>& subset) const {
  std::vector<int> pos(size() + 1, 0);
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i > 0 && subset[i] <= subset[i - 1]) throw std::invalid_argument("subset must be increasing");
    pos[subset[i]] = static_cast<int>(i) + 1;
  }
  std::vector<int> im(subset.size());
  for (size_t i = 0; i < subset.size(); ++i) {
    int j = (*this)(subset[i]);
    while (pos[j] == 0) j = (*this)(j);
    im[i] = pos[j];
  }
  return Perm(std::move(im));
}

std::string cycles_to_string(const std::vector<std::vector<int>>& cycles) {
  std::ostringstream os;
  for (const auto& cyc : cycles) {
    os << "(";
    for (size_t i = 0; i < cyc.size(); ++i) os << (i ? "," : "") << cyc[i];
    os << ")";
  }
  return os.str();
}

std::string Perm::to_string() const { return size() == 0 ? "()" : cycles_to_string(cycles()); }

Perm kreweras(const Perm& p) {
  if (!p.is_noncrossing()) throw std::invalid_argument("kreweras: permutation is not non-crossing");
  return Perm::long_cycle(p.size()) * p.inverse();
}

std::vector<int> cycle_of(const Perm& p, int i) {
  std::vector<int> cyc{i};
  for (int j = p(i); j != i; j = p(j)) cyc.push_back(j);
  std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
  return cyc;
}

}  // namespace halfperm
