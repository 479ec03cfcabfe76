#include "halfperm/diagrams/verify.hpp"

#include <map>
#include <set>

#include "halfperm/diagrams/dots.hpp"
#include "halfperm/diagrams/enumerate.hpp"
#include "halfperm/poly/transition_matrix.hpp"

namespace halfperm {

namespace {

std::string nk(int n, int k) { return "n=" + std::to_string(n) + ",k=" + std::to_string(k); }

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<Check> check_kreweras(int max_n) {
  std::vector<Check> out;
  {
    Perm pi = Perm::from_cycles(5, {{1, 2, 3}});
    Perm expected = Perm::from_cycles(5, {{1, 4, 5}});
    Perm got = kreweras(pi);
    out.push_back(Check{"kreweras-example", pi.to_string(), got == expected, got.to_string()});
  }
  for (int n = 1; n <= max_n; ++n) {
    bool pass = true;
    std::string detail;
    for (const Perm& pi : enum_nc(n, std::max(n, kDefaultEnumerationCap))) {
      Perm k = kreweras(pi);
      if (pi.cycle_count() + k.cycle_count() != n + 1 || !k.is_noncrossing()) {
        if (pass) detail = pi.to_string();
        pass = false;
      }
    }
    out.push_back(Check{"kreweras-count", "n=" + std::to_string(n), pass, detail});
  }
  return out;
}

std::vector<Check> check_oracles(int max_circular, int max_linear) {
  std::vector<Check> out;
  auto g = invert_unitriangular(transition_matrix(Family::GammaTilde, max_circular + 1));
  for (int n = 1; n <= max_circular; ++n)
    for (int k = 0; k <= n; ++k) {
      PolyC w = weighted_count(enum_ncc(n, k, std::max(n, kDefaultEnumerationCap)), Weight::ClosedBlocks);
      out.push_back(Check{"ncc-oracle", nk(n, k), w == g(n, k), w.to_string() + " vs " + g(n, k).to_string()});
    }
  auto p = invert_unitriangular(transition_matrix(Family::Pi, max_linear + 1));
  for (int n = 1; n <= max_linear; ++n)
    for (int k = 0; k <= n; ++k) {
      PolyC w = weighted_count(enum_ncl(n, k, std::max(n, kDefaultEnumerationCap)), Weight::ClosedBlocks);
      out.push_back(Check{"ncl-oracle", nk(n, k), w == p(n, k), w.to_string() + " vs " + p(n, k).to_string()});
    }
  return out;
}

std::vector<Check> check_dot_bijections(int max_n) {
  std::vector<Check> out;
  for (int n = 1; n <= max_n; ++n)
    for (int k = 0; k <= n; ++k) {
      std::set<DotStructure> expected;
      bool sizes = true;
      for (int j = 0; j + k <= n; ++j) {
        auto d = enumerate_dot_structures(n, j, k);
        sizes &= static_cast<long>(d.size()) == binomial(n, j) * binomial(n, j + k);
        expected.insert(d.begin(), d.end());
      }
      std::set<DotStructure> image;
      bool round_trip = true;
      std::string detail;
      auto cell = enum_ncc(n, k, std::max(n, kDefaultEnumerationCap));
      for (const auto& h : cell) {
        DotStructure d = dot_encode(h);
        image.insert(d);
        bool ok = false;
        try {
          ok = d.k() == k && dot_decode(d) == h;
        } catch (const std::exception&) {
        }
        if (!ok && round_trip) detail = h.to_string() + " -> " + d.to_string();
        round_trip &= ok;
      }
      bool bijective = round_trip && image.size() == cell.size() && image == expected;
      out.push_back(Check{"dot-counts", nk(n, k), sizes, ""});
      out.push_back(Check{"dot-bijection", nk(n, k), bijective,
                          detail.empty() ? std::to_string(cell.size()) + " elements" : detail});
    }
  return out;
}

std::vector<Check> check_cut_reassemble(int max_total) {
  std::vector<Check> out;
  const int cap = std::max(max_total, kDefaultEnumerationCap);
  std::map<std::pair<int, int>, std::vector<CircularHalfPerm>> cells;
  auto cell = [&](int n, int k) -> const std::vector<CircularHalfPerm>& {
    auto key = std::make_pair(n, k);
    auto it = cells.find(key);
    if (it == cells.end()) it = cells.emplace(key, enum_ncc(n, k, cap)).first;
    return it->second;
  };
  for (int m = 1; m < max_total; ++m)
    for (int n = 1; m + n <= max_total; ++n) {
      const std::string inst = "m=" + std::to_string(m) + ",n=" + std::to_string(n);
      auto all = enum_snc(m, n, cap);
      bool cut_ok = true;
      std::string detail;
      for (const auto& a : all) {
        auto [h1, h2] = cut(a);
        int k = h1.open_count();
        bool found = false;
        for (int s = 1; s <= k && !found; ++s) found = reassemble(h1, h2, s) == a;
        if (!found && cut_ok) detail = a.to_string();
        cut_ok &= found && h2.open_count() == k && k == a.through_block_count();
      }
      out.push_back(Check{"cut-roundtrip", inst, cut_ok, detail});

      std::vector<AnnularPerm> glued;
      bool halves_ok = true;
      PolyC weight;
      for (int k = 1; k <= std::min(m, n); ++k) {
        PolyC outer_w = weighted_count(cell(m, k), Weight::ClosedBlocks);
        PolyC inner_w = weighted_count(cell(n, k), Weight::ClosedBlocks);
        weight = weight + PolyC(k) * PolyC::monomial(k) * outer_w * inner_w;
        for (const auto& h1 : cell(m, k))
          for (const auto& h2 : cell(n, k))
            for (int s = 1; s <= k; ++s) {
              AnnularPerm a = reassemble(h1, h2, s);
              auto back = cut(a);
              halves_ok &= back.first == h1 && back.second == h2;
              glued.push_back(std::move(a));
            }
      }
      std::sort(glued.begin(), glued.end());
      bool once = glued == all;
      out.push_back(Check{"reassemble-exactly-k", inst, once && halves_ok,
                          std::to_string(glued.size()) + " glued vs " + std::to_string(all.size())});
      PolyC direct = weighted_count(all, Weight::AllBlocks);
      out.push_back(Check{"annular-weight", inst, direct == weight, direct.to_string() + " vs " + weight.to_string()});
    }
  return out;
}

}  // namespace halfperm
