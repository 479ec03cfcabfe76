#include "halfperm/wick/convolution.hpp"

#include <algorithm>

namespace halfperm {

namespace {

struct Blocks {
  std::vector<std::vector<int>> cycles;
  std::vector<char> open;
};

Blocks blocks_of(const LinearHalfPerm& h, int shift) {
  Blocks b;
  for (auto cyc : h.perm().cycles()) {
    b.open.push_back(h.is_open(cyc.front()));
    for (int& x : cyc) x += shift;
    b.cycles.push_back(std::move(cyc));
  }
  return b;
}

LinearHalfPerm build(int n, const Blocks& b) {
  std::vector<int> opens;
  for (size_t i = 0; i < b.cycles.size(); ++i)
    if (b.open[i]) opens.push_back(b.cycles[i].front());
  return LinearHalfPerm(Perm::from_cycles(n, b.cycles), opens);
}

}  // namespace

LinearHalfPerm concatenate(const LinearHalfPerm& pi, const LinearHalfPerm& sigma) {
  Blocks b = blocks_of(pi, 0), s = blocks_of(sigma, pi.size());
  b.cycles.insert(b.cycles.end(), s.cycles.begin(), s.cycles.end());
  b.open.insert(b.open.end(), s.open.begin(), s.open.end());
  return build(pi.size() + sigma.size(), b);
}

std::vector<LinearHalfPerm> convolution(const LinearHalfPerm& pi, const LinearHalfPerm& sigma) {
  const int n = pi.size() + sigma.size();
  Blocks left = blocks_of(pi, 0), right = blocks_of(sigma, pi.size());
  std::vector<size_t> left_open, right_open;
  for (size_t i = 0; i < left.cycles.size(); ++i)
    if (left.open[i]) left_open.push_back(i);
  for (size_t i = 0; i < right.cycles.size(); ++i)
    if (right.open[i]) right_open.push_back(i);
  std::reverse(left_open.begin(), left_open.end());  // rightmost first

  std::vector<LinearHalfPerm> out{concatenate(pi, sigma)};
  const size_t l = std::min(left_open.size(), right_open.size());
  for (size_t r = 0; r < l; ++r) {
    auto& lb = left.cycles[left_open[r]];
    lb.insert(lb.end(), right.cycles[right_open[r]].begin(), right.cycles[right_open[r]].end());
    right.cycles[right_open[r]].clear();
    Blocks joined = left;
    for (size_t i = 0; i < right.cycles.size(); ++i)
      if (!right.cycles[i].empty()) {
        joined.cycles.push_back(right.cycles[i]);
        joined.open.push_back(right.open[i]);
      }
    out.push_back(build(n, joined));
    joined.open[left_open[r]] = 0;
    out.push_back(build(n, joined));
    left.open[left_open[r]] = 0;
  }
  return out;
}

std::vector<LinearHalfPerm> prepend_extensions(const LinearHalfPerm& pi) {
  const int n = pi.size() + 1;
  Blocks b = blocks_of(pi, 1);
  std::vector<LinearHalfPerm> out;
  auto with_zero = [&](bool open) {
    Blocks s = b;
    s.cycles.insert(s.cycles.begin(), {1});
    s.open.insert(s.open.begin(), open);
    return build(n, s);
  };
  out.push_back(with_zero(true));
  auto first_open = std::find(b.open.begin(), b.open.end(), 1);
  if (first_open != b.open.end()) {
    const size_t i = static_cast<size_t>(first_open - b.open.begin());
    Blocks s = b;
    s.cycles[i].insert(s.cycles[i].begin(), 1);
    s.open[i] = 0;
    out.push_back(build(n, s));
    s.open[i] = 1;
    out.push_back(build(n, s));
  }
  out.push_back(with_zero(false));
  return out;
}

}  // namespace halfperm
