#include "halfperm/diagrams/contractions.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "halfperm/poly/transition_matrix.hpp"

namespace halfperm {

namespace {

int total(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }
int max_of(const std::vector<int>& v) { return v.empty() ? 0 : *std::max_element(v.begin(), v.end()); }

std::string vec_string(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string word_string(const Word& w) { return vec_string(w.lengths) + "c" + vec_string(w.colors); }

// Calls f on every vector with 0 <= u[r] <= bound[r].
void for_each_box(const std::vector<int>& bound, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> u(bound.size(), 0);
  while (true) {
    f(u);
    size_t r = 0;
    while (r < u.size() && u[r] == bound[r]) u[r++] = 0;
    if (r == u.size()) return;
    ++u[r];
  }
}

PolyC coefficient_product(const TransitionMatrix& t, const std::vector<int>& rows, const std::vector<int>& cols) {
  PolyC prod(1);
  for (size_t r = 0; r < rows.size(); ++r) {
    prod = prod * t(rows[r], cols[r]);
    if (prod.is_zero()) break;
  }
  return prod;
}

// Sum over u, v of a(m,u) b(n,v) |S_NC(u over x; v over y)|_c.
PolyC contract(const Word& outer, const TransitionMatrix& a, const std::optional<std::vector<int>>& x,
               const Word& inner, const TransitionMatrix& b, const std::optional<std::vector<int>>& y, int cap) {
  PolyC sum;
  for_each_box(outer.lengths, [&](const std::vector<int>& u) {
    PolyC cu = coefficient_product(a, outer.lengths, u);
    if (cu.is_zero()) return;
    for_each_box(inner.lengths, [&](const std::vector<int>& v) {
      PolyC cv = coefficient_product(b, inner.lengths, v);
      if (cv.is_zero()) return;
      ColoredAnnularSpec spec{u, outer.colors, v, inner.colors, x, y};
      sum = sum + cu * cv * colored_weight(spec, cap);
    });
  });
  return sum;
}

TransitionMatrix pi_coefficients(int size) { return transition_matrix(Family::Pi, size + 1); }
TransitionMatrix gamma_coefficients(int size) { return transition_matrix(Family::Gamma, size + 1); }

// Non-crossing partitions of the intervals of `lengths` (one colour) that connect all of them.
PolyC connected_weight(const std::vector<int>& lengths, int cap) {
  const int n = total(lengths);
  std::vector<int> owner;
  for (size_t r = 0; r < lengths.size(); ++r) owner.insert(owner.end(), lengths[r], static_cast<int>(r));
  return weighted_count(enum_nc(n, cap), [&](const Perm& p) {
    std::vector<int> parent(lengths.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };
    for (auto& cyc : p.cycles())
      for (int x : cyc) parent[find(owner[x - 1])] = find(owner[cyc.front() - 1]);
    std::set<int> roots;
    for (size_t r = 0; r < lengths.size(); ++r) roots.insert(find(static_cast<int>(r)));
    return roots.size() == 1 ? p.cycle_count() : -1;
  });
}

std::vector<int> alternating_colors(int r) {
  std::vector<int> col(r);
  for (int i = 0; i < r; ++i) col[i] = i % 2;
  if (r >= 3 && r % 2 == 1) col[r - 1] = 2;
  return col;
}

Check equality(const std::string& identity, const std::string& instance, const PolyC& lhs, const PolyC& rhs) {
  return Check{identity, instance, lhs == rhs, lhs.to_string() + " vs " + rhs.to_string()};
}

}  // namespace

PolyC colored_nc_weight(const Word& w, int cap) {
  if (total(w.lengths) == 0) return PolyC(1);
  return weighted_count(enum_nc_colored(expand_colors(w.lengths, w.colors), cap), Weight::AllBlocks);
}

PolyC connection_pattern_sum(const Word& w, int cap) {
  std::map<std::vector<int>, PolyC> memo;
  PolyC sum;
  for (const Perm& tau : enum_nc_colored(w.colors, cap)) {
    PolyC term(1);
    for (auto& block : tau.cycles()) {
      std::vector<int> lens;
      for (int r : block) lens.push_back(w.lengths[r - 1]);
      auto it = memo.find(lens);
      if (it == memo.end()) it = memo.emplace(lens, connected_weight(lens, cap)).first;
      term = term * it->second;
    }
    sum = sum + term;
  }
  return sum;
}

PolyC filtered_contraction(const Word& outer, const std::vector<int>& x, const Word& inner,
                           const std::vector<int>& y, int cap) {
  auto t = pi_coefficients(std::max(max_of(outer.lengths), max_of(inner.lengths)));
  return contract(outer, t, x, inner, t, y, cap);
}

PolyC word_covariance(const Word& outer, const Word& inner, int cap) {
  auto t = pi_coefficients(std::max(max_of(outer.lengths), max_of(inner.lengths)));
  return contract(outer, t, std::nullopt, inner, t, std::nullopt, cap);
}

PolyC spoke_weight(const Word& outer, const Word& inner, int cap) {
  return colored_weight(ColoredAnnularSpec{outer.lengths, outer.colors, inner.lengths, inner.colors,
                                           outer.lengths, inner.lengths},
                        cap);
}

PolyC word_gamma_covariance(const Word& outer, int n, int color, int cap) {
  auto p = pi_coefficients(max_of(outer.lengths));
  auto q = gamma_coefficients(n);
  return contract(outer, p, std::nullopt, Word{{n}, {color}}, q, std::nullopt, cap);
}

PolyC gamma_gamma_covariance(int m, int i, int n, int j, int cap) {
  auto q = gamma_coefficients(std::max(m, n));
  return contract(Word{{m}, {i}}, q, std::nullopt, Word{{n}, {j}}, q, std::nullopt, cap);
}

std::pair<PolyC, PolyC> lineardecomp_check(int n) {
  if (n < 1) throw std::invalid_argument("lineardecomp_check: n must be positive");
  auto p = invert_unitriangular(transition_matrix(Family::Pi, n + 1));
  PolyC lhs;
  for (int k = 0; 2 * k + 1 <= n; ++k) lhs = lhs + PolyC::monomial(k) * p(n, 2 * k + 1);
  PolyC rhs;
  for (const Perm& pi : enum_nc(n, std::max(n, kDefaultEnumerationCap)))
    rhs = rhs + PolyC(pi.cycle_count()) * PolyC::monomial(pi.cycle_count() - 1);
  return {lhs, rhs};
}

std::vector<Check> check_lemma17(int max_intervals, int max_length) {
  std::vector<Check> out;
  for (int r = 1; r <= max_intervals; ++r) {
    std::vector<int> bound(r, max_length - 1);
    for_each_box(bound, [&](const std::vector<int>& len0) {
      std::vector<int> lengths = len0;
      for (int& l : lengths) ++l;
      // Colour patterns as restricted growth strings.
      std::vector<int> colors(r, 0);
      std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == r) {
          Word w{lengths, colors};
          out.push_back(equality("lemma17", word_string(w), colored_nc_weight(w), connection_pattern_sum(w)));
          return;
        }
        for (int col = 0; col <= used && col < 3; ++col) {
          colors[i] = col;
          rec(i + 1, std::max(used, col + 1));
        }
      };
      colors[0] = 0;
      rec(1, 1);
    });
  }
  return out;
}

std::vector<Check> check_lemma18() {
  std::vector<Check> out;
  const std::vector<Word> outers = {{{1, 1}, {0, 1}}, {{2, 1}, {0, 1}}, {{1, 2}, {0, 1}}, {{2, 2}, {0, 1}},
                                    {{1, 1, 1}, {0, 1, 2}}};
  const std::vector<Word> inners = {{{1}, {0}}, {{2}, {1}}, {{1, 1}, {0, 1}}, {{2, 1}, {1, 0}}};
  for (const Word& o : outers)
    for (const Word& in : inners) {
      if (total(o.lengths) + total(in.lengths) > 7) continue;
      for_each_box(o.lengths, [&](const std::vector<int>& x) {
        if (std::find(x.begin(), x.end(), 0) == x.end()) return;
        for_each_box(in.lengths, [&](const std::vector<int>& y) {
          std::string inst = word_string(o) + " over " + vec_string(x) + "; " + word_string(in) + " over " +
                             vec_string(y);
          out.push_back(equality("lemma18", inst, filtered_contraction(o, x, in, y), PolyC()));
        });
      });
    }
  return out;
}

std::vector<Check> check_covariance_contractions() {
  std::vector<Check> out;
  const PolyC c = PolyC::c();
  {
    // One interval per circle: both halves are circular.
    ColoredAnnularSpec spec{{2}, {0}, {1}, {0}, std::vector<int>{1}, std::vector<int>{1}};
    auto g = invert_unitriangular(transition_matrix(Family::GammaTilde, 3));
    out.push_back(equality("circular-factorization", "(2 over 1; 1 over 1)", colored_weight(spec),
                           g(2, 1) * g(1, 1) * c));
  }
  {
    // Alternating intervals: each interval restricts to a linear half-permutation.
    Word a{{2, 1}, {0, 1}}, b{{1, 1}, {0, 1}};
    ColoredAnnularSpec spec{a.lengths, a.colors, b.lengths, b.colors, std::vector<int>{1, 1}, std::vector<int>{1, 1}};
    auto p = invert_unitriangular(transition_matrix(Family::Pi, 3));
    out.push_back(equality("linear-factorization", "(2,1 over 1,1; 1,1 over 1,1)", colored_weight(spec),
                           p(2, 1) * p(1, 1) * spoke_weight(Word{{1, 1}, {0, 1}}, b)));
  }
  const std::vector<Word> words = {{{1}, {0}},       {{2}, {0}},       {{3}, {1}},       {{1, 1}, {0, 1}},
                                   {{1, 1}, {1, 0}}, {{2, 1}, {0, 1}}, {{1, 2}, {0, 1}}, {{1, 1, 1, 1}, {0, 1, 0, 1}}};
  // Cyclically alternating colours need at least two intervals; one interval is the Gamma case below.
  for (const Word& a : words)
    for (const Word& b : words) {
      if (a.lengths.size() < 2 || b.lengths.size() < 2 || total(a.lengths) + total(b.lengths) > 8) continue;
      out.push_back(equality("bigprop", word_string(a) + " ; " + word_string(b), word_covariance(a, b),
                             spoke_weight(a, b)));
    }
  for (const Word& a : words) {
    if (a.lengths.size() < 2) continue;
    for (int n = 1; n <= 3; ++n)
      for (int color : {0, 1}) {
        if (total(a.lengths) + n > 7) continue;
        out.push_back(equality("gsindep", word_string(a) + " ; Gamma_" + std::to_string(n) + " colour " +
                                              std::to_string(color),
                               word_gamma_covariance(a, n, color), PolyC()));
      }
  }
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (int j : {0, 1}) {
        PolyC expected = (m == n && j == 0) ? PolyC(m) * PolyC::monomial(m) : PolyC();
        out.push_back(equality("ggindep", "m=" + std::to_string(m) + ",n=" + std::to_string(n) + ",colours 0/" +
                                              std::to_string(j),
                               gamma_gamma_covariance(m, 0, n, j), expected));
      }
  return out;
}

std::vector<Check> check_spoke_weights(int max_size) {
  std::vector<Check> out;
  for (int m = 1; m <= max_size; ++m)
    for (int n = 1; n <= max_size; ++n) {
      PolyC expected = m == n ? PolyC(m) * PolyC::monomial(m) : PolyC();
      out.push_back(equality("spoke", "m=" + std::to_string(m) + ",n=" + std::to_string(n),
                             spoke_weight(Word{{m}, {0}}, Word{{n}, {0}}, std::max(m + n, kDefaultEnumerationCap)),
                             expected));
    }
  return out;
}

std::vector<Check> check_lineardecomp(int max_n) {
  std::vector<Check> out;
  for (int n = 1; n <= max_n; ++n) {
    auto [lhs, rhs] = lineardecomp_check(n);
    out.push_back(equality("lineardecomp", "n=" + std::to_string(n), lhs, rhs));
  }
  return out;
}

std::vector<Check> check_decomposition_theorem(int max_total) {
  std::vector<Check> out;
  // At least two intervals: with one, the circle has no initial point to anchor a linear half-permutation.
  for (int m = 2; m <= max_total; ++m) {
    std::vector<CircularHalfPerm> all;
    for (int k = 1; k <= m; ++k) {
      auto cell = enum_ncc(m, k, std::max(m, kDefaultEnumerationCap));
      all.insert(all.end(), cell.begin(), cell.end());
    }
    // Compositions of m by the bitmask of cut positions.
    for (unsigned mask = 1; mask < (1u << (m - 1)); ++mask) {
      std::vector<int> lengths{1};
      for (int i = 1; i < m; ++i) {
        if (mask & (1u << (i - 1))) lengths.push_back(1);
        else ++lengths.back();
      }
      const std::vector<int> colors = alternating_colors(static_cast<int>(lengths.size()));
      const std::vector<int> point_color = expand_colors(lengths, colors);
      std::vector<int> interval;
      for (size_t r = 0; r < lengths.size(); ++r) interval.insert(interval.end(), lengths[r], static_cast<int>(r));
      bool pass = true;
      std::string detail;
      long tested = 0;
      for (const auto& h : all) {
        bool mono = true;
        for (auto& cyc : h.perm().cycles())
          for (int x : cyc) mono &= point_color[x - 1] == point_color[cyc.front() - 1];
        if (!mono) continue;
        std::vector<int> opens(lengths.size(), 0);
        for (auto& b : h.open_blocks())
          for (int x : b) ++opens[interval[x - 1]];
        if (std::find(opens.begin(), opens.end(), 0) != opens.end()) continue;
        ++tested;
        try {
          int open_total = 0;
          for (size_t r = 0; r < lengths.size(); ++r)
            open_total += restrict_to_interval(h, lengths, static_cast<int>(r)).open_count();
          if (open_total != h.open_count()) throw std::invalid_argument("open blocks split between intervals");
        } catch (const std::exception& e) {
          if (pass) detail = h.to_string() + ": " + e.what();
          pass = false;
        }
      }
      if (detail.empty()) detail = std::to_string(tested) + " half-permutations";
      out.push_back(Check{"decomposition", vec_string(lengths) + "c" + vec_string(colors), pass, detail});
    }
  }
  return out;
}

}  // namespace halfperm
