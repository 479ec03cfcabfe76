#include "halfperm/diagrams/annular.hpp"

#include <algorithm>
#include <stdexcept>

namespace halfperm {

bool is_annular_noncrossing(int m, int n, const Perm& p) {
  if (p.size() != m + n || m < 1 || n < 1) return false;
  bool connected = false;
  for (int i = 1; i <= m && !connected; ++i) connected = p(i) > m;
  if (!connected) return false;
  return p.cycle_count() + (Perm::annular_long_cycle(m, n) * p.inverse()).cycle_count() == m + n;
}

AnnularPerm::AnnularPerm(int m, int n, Perm perm) : m_(m), n_(n), perm_(std::move(perm)) {
  if (!is_annular_noncrossing(m, n, perm_))
    throw std::invalid_argument("not a non-crossing annular permutation: " + perm_.to_string());
}

Perm AnnularPerm::complement() const { return Perm::annular_long_cycle(m_, n_) * perm_.inverse(); }

bool AnnularPerm::is_through_block(const std::vector<int>& cycle) const {
  bool outer = false, inner = false;
  for (int x : cycle) (x <= m_ ? outer : inner) = true;
  return outer && inner;
}

int AnnularPerm::through_block_count() const {
  int k = 0;
  for (auto& cyc : perm_.cycles()) k += is_through_block(cyc);
  return k;
}

std::pair<CircularHalfPerm, CircularHalfPerm> cut(const AnnularPerm& a) {
  const int m = a.outer_size(), n = a.inner_size();
  std::vector<int> outer_pts(m), inner_pts(n);
  for (int i = 0; i < m; ++i) outer_pts[i] = i + 1;
  for (int i = 0; i < n; ++i) inner_pts[i] = m + i + 1;
  Perm pi1 = a.perm().induced(outer_pts);
  Perm pi2 = a.perm().induced(inner_pts);

  std::vector<int> open1, open2;
  for (auto& cyc : a.perm().cycles()) {
    if (!a.is_through_block(cyc)) continue;
    open1.push_back(*std::min_element(cyc.begin(), cyc.end()));
    open2.push_back(*std::max_element(cyc.begin(), cyc.end()) - m);
  }
  std::vector<int> ref1, ref2;
  for (auto& cyc : a.complement().cycles()) {
    if (!a.is_through_block(cyc)) continue;
    for (int x : cyc) (x <= m ? ref1.push_back(x) : ref2.push_back(x - m));
  }
  return {CircularHalfPerm::with_open_blocks(std::move(pi1), std::move(ref1), open1),
          CircularHalfPerm::with_open_blocks(std::move(pi2), std::move(ref2), open2)};
}

AnnularPerm reassemble(const CircularHalfPerm& outer, const CircularHalfPerm& inner, int s) {
  const int k = outer.open_count();
  if (k < 1 || inner.open_count() != k)
    throw std::invalid_argument("reassemble: half-permutations must have the same positive number of open blocks");
  if (s < 1 || s > k) throw std::invalid_argument("reassemble: s must lie in [1, k]");
  const int m = outer.size(), n = inner.size();
  const auto& xs = outer.open_initial_points();
  const auto& ys = inner.open_initial_points();

  std::vector<int> images(m + n);
  for (int i = 1; i <= m; ++i) images[i - 1] = outer.perm()(i);
  for (int i = 1; i <= n; ++i) images[m + i - 1] = m + inner.perm()(i);
  // Left-multiply by the disjoint transpositions (x_i, y_{k-i+s}).
  std::vector<int> swap(m + n + 1);
  for (int p = 1; p <= m + n; ++p) swap[p] = p;
  for (int i = 1; i <= k; ++i) {
    int j = ((k - i + s - 1) % k + k) % k + 1;
    int x = xs[i - 1], y = m + ys[j - 1];
    swap[x] = y;
    swap[y] = x;
  }
  for (int& v : images) v = swap[v];
  return AnnularPerm(m, n, Perm(std::move(images)));
}

}  // namespace halfperm
