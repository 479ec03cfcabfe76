#include "halfperm/diagrams/recursion_maps.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "halfperm/diagrams/dots.hpp"
#include "halfperm/diagrams/enumerate.hpp"

namespace halfperm {

CircularStep circular_recursion_step(const CircularHalfPerm& h) {
  if (h.size() < 2) throw std::invalid_argument("recursion step needs at least two points");
  DotStructure d = dot_encode(h);
  const int last = h.size() - 1;
  const bool wu = d.unprimed[last] == Dot::White, wp = d.primed[last] == Dot::White;
  int klass = wu && wp ? 1 : (!wu && wp ? 2 : (wu ? 3 : 4));
  d.unprimed.pop_back();
  d.primed.pop_back();
  d.n -= 1;
  if (h.open_count() == 0 && klass == 1) {
    auto flip = [](Dot x) { return x == Dot::White ? Dot::Black : Dot::White; };
    std::transform(d.unprimed.begin(), d.unprimed.end(), d.unprimed.begin(), flip);
    std::transform(d.primed.begin(), d.primed.end(), d.primed.begin(), flip);
  }
  return {klass, dot_decode(d)};
}

LinearStep linear_recursion_step(const LinearHalfPerm& h) {
  const int n1 = h.size();
  if (n1 < 2) throw std::invalid_argument("recursion step needs at least two points");
  const std::vector<int> block = cycle_of(h.perm(), n1);
  const bool open = h.is_open(n1), single = block.size() == 1;
  int klass = open ? (single ? 1 : 2) : (single ? 3 : 4);
  std::vector<int> rest(n1 - 1);
  std::iota(rest.begin(), rest.end(), 1);
  Perm pi = h.perm().induced(rest);
  std::vector<int> opens;
  for (auto& b : h.open_blocks())
    if (b.front() != n1) opens.push_back(b.front());
  if (klass == 4) opens.push_back(block.front());
  return {klass, LinearHalfPerm(std::move(pi), opens)};
}

namespace {

std::string nk(int n, int k) { return "n=" + std::to_string(n) + ",k=" + std::to_string(k); }

template <typename T>
bool is_bijection_onto(std::vector<T> images, const std::vector<T>& target) {
  std::sort(images.begin(), images.end());
  return images == target;  // target is sorted by the enumerators
}

}  // namespace

std::vector<Check> check_circular_recursion(int max_n) {
  std::vector<Check> out;
  const PolyC c = PolyC::c();
  std::map<std::pair<int, int>, std::vector<CircularHalfPerm>> cells;
  auto cell = [&](int n, int k) -> const std::vector<CircularHalfPerm>& {
    auto key = std::make_pair(n, k);
    auto it = cells.find(key);
    if (it == cells.end()) it = cells.emplace(key, enum_ncc(n, k, max_n)).first;
    return it->second;
  };
  auto gbar = [&](int n, int k) -> PolyC {
    if (k < 0 || k > n) return {};
    return weighted_count(cell(n, k), Weight::ClosedBlocks);
  };

  for (int n = 1; n + 1 <= max_n; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      std::map<int, std::vector<CircularHalfPerm>> images;
      bool bookkeeping = true;
      std::string first_failure;
      for (const auto& h : cell(n + 1, k)) {
        CircularStep st = circular_recursion_step(h);
        int want_k, want_exp;
        const int e = h.weight_exponent();
        if (k > 0) {
          const int dk[] = {0, -1, 0, 0, 1};
          const int de[] = {0, 0, 0, -1, -1};
          want_k = k + dk[st.klass];
          want_exp = e + de[st.klass];
        } else {
          const int tk[] = {0, 1, 0, 0, 1};
          want_k = tk[st.klass];
          want_exp = st.klass == 1 ? n - e : (st.klass == 2 ? e : e - 1);
        }
        if (st.image.open_count() != want_k || st.image.weight_exponent() != want_exp) {
          if (bookkeeping) first_failure = h.to_string();
          bookkeeping = false;
        }
        images[st.klass].push_back(st.image);
      }
      out.push_back(Check{"gbar-bookkeeping", nk(n + 1, k), bookkeeping, first_failure});
      for (int klass = 1; klass <= 4; ++klass) {
        int target_k = k > 0 ? k + (klass == 1 ? -1 : klass == 4 ? 1 : 0) : (klass == 1 || klass == 4 ? 1 : 0);
        if (target_k < 0 || target_k > n) {
          out.push_back(Check{"gbar-class-map", nk(n + 1, k) + ",class=" + std::to_string(klass),
                              images[klass].empty(), "class should be empty"});
          continue;
        }
        out.push_back(Check{"gbar-class-map", nk(n + 1, k) + ",class=" + std::to_string(klass),
                            is_bijection_onto(images[klass], cell(n, target_k)), ""});
      }
      if (k > 0) {
        PolyC lhs = gbar(n + 1, k);
        PolyC rhs = gbar(n, k - 1) + (PolyC(1) + c) * gbar(n, k) + c * gbar(n, k + 1);
        out.push_back(Check{"gbar1", nk(n, k), lhs == rhs, lhs.to_string() + " vs " + rhs.to_string()});
      } else {
        PolyC lhs = gbar(n + 1, 0);
        PolyC rhs = (PolyC(1) + c) * gbar(n, 0) + 2L * c * gbar(n, 1);
        out.push_back(Check{"gbar2", nk(n, 0), lhs == rhs, lhs.to_string() + " vs " + rhs.to_string()});
      }
    }
  }
  return out;
}

std::vector<Check> check_linear_recursion(int max_n) {
  std::vector<Check> out;
  const PolyC c = PolyC::c();
  std::map<std::pair<int, int>, std::vector<LinearHalfPerm>> cells;
  auto cell = [&](int n, int k) -> const std::vector<LinearHalfPerm>& {
    auto key = std::make_pair(n, k);
    auto it = cells.find(key);
    if (it == cells.end()) it = cells.emplace(key, enum_ncl(n, k, max_n)).first;
    return it->second;
  };
  auto pbar = [&](int n, int k) -> PolyC {
    if (k < 0 || k > n) return {};
    return weighted_count(cell(n, k), Weight::ClosedBlocks);
  };
  for (int n = 1; n + 1 <= max_n; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      std::map<int, std::vector<LinearHalfPerm>> images;
      bool bookkeeping = true;
      std::string first_failure;
      for (const auto& h : cell(n + 1, k)) {
        LinearStep st = linear_recursion_step(h);
        const int dk[] = {0, -1, 0, 0, 1};
        const int dcl[] = {0, 0, 0, -1, -1};
        if (st.image.open_count() != k + dk[st.klass] ||
            st.image.closed_count() != h.closed_count() + dcl[st.klass]) {
          if (bookkeeping) first_failure = h.to_string();
          bookkeeping = false;
        }
        images[st.klass].push_back(st.image);
      }
      out.push_back(Check{"linear-bookkeeping", nk(n + 1, k), bookkeeping, first_failure});
      for (int klass = 1; klass <= 4; ++klass) {
        int target_k = k + (klass == 1 ? -1 : klass == 4 ? 1 : 0);
        std::string inst = nk(n + 1, k) + ",class=" + std::to_string(klass);
        if (target_k < 0 || target_k > n || (k == 0 && klass <= 2)) {
          out.push_back(Check{"linear-class-map", inst, images[klass].empty(), "class should be empty"});
          continue;
        }
        out.push_back(Check{"linear-class-map", inst, is_bijection_onto(images[klass], cell(n, target_k)), ""});
      }
      PolyC lhs = pbar(n + 1, k);
      PolyC rhs = k > 0 ? pbar(n, k - 1) + (PolyC(1) + c) * pbar(n, k) + c * pbar(n, k + 1)
                        : c * pbar(n, 0) + c * pbar(n, 1);
      out.push_back(Check{k > 0 ? "pbar-Prec1" : "pbar-Prec2", nk(n, k), lhs == rhs,
                          lhs.to_string() + " vs " + rhs.to_string()});
    }
  }
  return out;
}

}  // namespace halfperm
