#include "halfperm/diagrams/enumerate.hpp"

#include <algorithm>

namespace halfperm {

CapExceeded::CapExceeded(const std::string& what, int requested, int cap)
    : std::runtime_error(what + ": size " + std::to_string(requested) + " exceeds enumeration cap " +
                         std::to_string(cap) + " (raise with --cap)"),
      requested_(requested),
      cap_(cap) {}

namespace {

void check_cap(const char* what, int requested, int cap) {
  if (requested > cap) throw CapExceeded(what, requested, cap);
}

// Restricted growth strings, pruned so that joining i to a block never crosses:
// every point strictly between the block's last point and i must lie in a block that starts later.
struct NcGenerator {
  const std::vector<int>& colors;
  int n;
  std::vector<int> block_of;
  std::vector<int> block_min, block_last, block_color;
  std::vector<Perm> out;

  void run(int i) {
    if (i == n) {
      std::vector<std::vector<int>> cycles(block_min.size());
      for (int p = 0; p < n; ++p) cycles[block_of[p]].push_back(p + 1);
      out.push_back(Perm::from_cycles(n, cycles));
      return;
    }
    const int col = colors.empty() ? 0 : colors[i];
    for (size_t b = 0; b < block_min.size(); ++b) {
      if (block_color[b] != col) continue;
      int a = block_last[b];
      bool ok = true;
      for (int j = a + 1; j < i && ok; ++j) ok = block_min[block_of[j]] > a;
      if (!ok) continue;
      block_of[i] = static_cast<int>(b);
      block_last[b] = i;
      run(i + 1);
      block_last[b] = a;
    }
    block_of[i] = static_cast<int>(block_min.size());
    block_min.push_back(i);
    block_last.push_back(i);
    block_color.push_back(col);
    run(i + 1);
    block_min.pop_back();
    block_last.pop_back();
    block_color.pop_back();
  }
};

std::vector<Perm> generate_nc(const std::vector<int>& colors, int n) {
  NcGenerator g{colors, n, std::vector<int>(n, 0), {}, {}, {}, {}};
  g.run(0);
  std::sort(g.out.begin(), g.out.end());
  return std::move(g.out);
}

template <typename F>
void for_each_subset(int total, int k, F&& f) {
  if (k > total) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == total - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct AnnularBuilder {
  int m, n;
  const std::vector<int>* outer_colors;
  const std::vector<int>* inner_colors;
  std::vector<std::vector<int>> outer, inner;
  std::vector<int> match;  // outer block -> inner block or -1
  std::vector<char> inner_used;
  std::vector<AnnularPerm>* out;

  int color_outer(const std::vector<int>& b) const {
    return outer_colors->empty() ? 0 : (*outer_colors)[b.front() - 1];
  }
  int color_inner(const std::vector<int>& b) const {
    return inner_colors->empty() ? 0 : (*inner_colors)[b.front() - m - 1];
  }

  void emit_orientations(size_t pair_index, const std::vector<std::pair<int, int>>& pairs,
                         std::vector<int>& images) {
    if (pair_index == pairs.size()) {
      Perm p(images);
      if (is_annular_noncrossing(m, n, p)) out->emplace_back(m, n, std::move(p));
      return;
    }
    const auto& A = outer[pairs[pair_index].first];
    const auto& B = inner[pairs[pair_index].second];
    for (size_t s = 0; s < A.size(); ++s)
      for (size_t t = 0; t < B.size(); ++t) {
        std::vector<int> cyc;
        for (size_t i = 0; i < A.size(); ++i) cyc.push_back(A[(s + i) % A.size()]);
        for (size_t i = 0; i < B.size(); ++i) cyc.push_back(B[(t + i) % B.size()]);
        for (size_t i = 0; i < cyc.size(); ++i) images[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
        emit_orientations(pair_index + 1, pairs, images);
      }
  }

  void emit() {
    std::vector<int> images(m + n, 0);
    std::vector<std::pair<int, int>> pairs;
    auto cyclic = [&](const std::vector<int>& b) {
      for (size_t i = 0; i < b.size(); ++i) images[b[i] - 1] = b[(i + 1) % b.size()];
    };
    for (size_t i = 0; i < outer.size(); ++i) {
      if (match[i] < 0)
        cyclic(outer[i]);
      else
        pairs.emplace_back(static_cast<int>(i), match[i]);
    }
    for (size_t j = 0; j < inner.size(); ++j)
      if (!inner_used[j]) cyclic(inner[j]);
    emit_orientations(0, pairs, images);
  }

  void assign(size_t i, int matched) {
    if (i == outer.size()) {
      if (matched > 0) emit();
      return;
    }
    match[i] = -1;
    assign(i + 1, matched);
    for (size_t j = 0; j < inner.size(); ++j) {
      if (inner_used[j] || color_outer(outer[i]) != color_inner(inner[j])) continue;
      inner_used[j] = 1;
      match[i] = static_cast<int>(j);
      assign(i + 1, matched + 1);
      inner_used[j] = 0;
    }
    match[i] = -1;
  }
};

}  // namespace

std::vector<Perm> enum_nc(int n, int cap) {
  if (n < 1) throw std::invalid_argument("enum_nc: n must be positive");
  check_cap("enum_nc", n, cap);
  return generate_nc({}, n);
}

std::vector<Perm> enum_nc_colored(const std::vector<int>& colors, int cap) {
  check_cap("enum_nc", static_cast<int>(colors.size()), cap);
  return generate_nc(colors, static_cast<int>(colors.size()));
}

std::vector<CircularHalfPerm> enum_ncc(int n, int k, int cap) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("enum_ncc: need 0 <= k <= n, n >= 1");
  check_cap("enum_ncc", n, cap);
  std::vector<CircularHalfPerm> out;
  for (const Perm& pi : enum_nc(n, cap)) {
    Perm comp = kreweras(pi);
    if (k == 0) {
      for (auto& b : pi.cycles()) out.push_back(CircularHalfPerm::with_designated(pi, Designation::InPerm, b));
      for (auto& b : comp.cycles())
        out.push_back(CircularHalfPerm::with_designated(pi, Designation::InComplement, b));
      continue;
    }
    for (auto& ref : comp.cycles()) {
      // Each point of the reference cycle lies in a different block of pi.
      for_each_subset(static_cast<int>(ref.size()), k, [&](const std::vector<int>& idx) {
        std::vector<int> chosen;
        for (int i : idx) chosen.push_back(ref[i]);
        out.push_back(CircularHalfPerm::with_open_blocks(pi, ref, chosen));
      });
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LinearHalfPerm> enum_ncl(int n, int k, int cap) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("enum_ncl: need 0 <= k <= n, n >= 1");
  check_cap("enum_ncl", n, cap);
  std::vector<LinearHalfPerm> out;
  for (const Perm& pi : enum_nc(n, cap)) {
    if (k == 0) {
      out.emplace_back(pi, std::vector<int>{});
      continue;
    }
    std::vector<int> pts = cycle_of(kreweras(pi), 1);
    for_each_subset(static_cast<int>(pts.size()), k, [&](const std::vector<int>& idx) {
      std::vector<int> chosen;
      for (int i : idx) chosen.push_back(pts[i]);
      out.emplace_back(pi, chosen);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AnnularPerm> enum_snc_colored(const std::vector<int>& outer_colors, const std::vector<int>& inner_colors,
                                          int cap) {
  const int m = static_cast<int>(outer_colors.size()), n = static_cast<int>(inner_colors.size());
  check_cap("enum_snc", m + n, cap);
  std::vector<AnnularPerm> out;
  if (m == 0 || n == 0) return out;
  auto outer_nc = generate_nc(outer_colors, m);
  auto inner_nc = generate_nc(inner_colors, n);
  AnnularBuilder b{m, n, &outer_colors, &inner_colors, {}, {}, {}, {}, &out};
  for (const Perm& p1 : outer_nc) {
    b.outer = p1.cycles();
    for (const Perm& p2 : inner_nc) {
      b.inner = p2.cycles();
      for (auto& blk : b.inner)
        for (int& x : blk) x += m;
      b.match.assign(b.outer.size(), -1);
      b.inner_used.assign(b.inner.size(), 0);
      b.assign(0, 0);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AnnularPerm> enum_snc(int m, int n, int cap) {
  if (m < 1 || n < 1) throw std::invalid_argument("enum_snc: circle sizes must be positive");
  check_cap("enum_snc", m + n, cap);
  return enum_snc_colored(std::vector<int>(m, 0), std::vector<int>(n, 0), cap);
}

PolyC weighted_count(const std::vector<Perm>& diagrams, Weight) {
  return weighted_count(diagrams, [](const Perm& p) { return p.cycle_count(); });
}

PolyC weighted_count(const std::vector<AnnularPerm>& diagrams, Weight w) {
  if (w == Weight::AllBlocks)
    return weighted_count(diagrams, [](const AnnularPerm& a) { return a.perm().cycle_count(); });
  return weighted_count(diagrams,
                        [](const AnnularPerm& a) { return a.perm().cycle_count() - a.through_block_count(); });
}

PolyC weighted_count(const std::vector<CircularHalfPerm>& diagrams, Weight w) {
  if (w == Weight::AllBlocks)
    return weighted_count(diagrams, [](const CircularHalfPerm& h) { return h.perm().cycle_count(); });
  return weighted_count(diagrams, [](const CircularHalfPerm& h) { return h.weight_exponent(); });
}

PolyC weighted_count(const std::vector<LinearHalfPerm>& diagrams, Weight w) {
  if (w == Weight::AllBlocks)
    return weighted_count(diagrams, [](const LinearHalfPerm& h) { return h.perm().cycle_count(); });
  return weighted_count(diagrams, [](const LinearHalfPerm& h) { return h.closed_count(); });
}

}  // namespace halfperm
