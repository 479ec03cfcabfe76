#include "halfperm/diagrams/colored.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace halfperm {

namespace {

int total(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

void validate_side(const std::vector<int>& lengths, const std::vector<int>& colors,
                   const std::optional<std::vector<int>>& through, const char* side) {
  const std::string s(side);
  if (lengths.empty() || lengths.size() != colors.size())
    throw std::invalid_argument(s + " circle: lengths and colours must be non-empty and of equal size");
  for (int len : lengths)
    if (len < 1) throw std::invalid_argument(s + " circle: interval lengths must be positive");
  if (lengths.size() > 1)
    for (size_t i = 0; i < colors.size(); ++i)
      if (colors[i] == colors[(i + 1) % colors.size()])
        throw std::invalid_argument(s + " circle: adjacent intervals must have different colours");
  if (through) {
    if (through->size() != lengths.size()) throw std::invalid_argument(s + " circle: filter size mismatch");
    for (size_t i = 0; i < lengths.size(); ++i)
      if ((*through)[i] < 0 || (*through)[i] > lengths[i])
        throw std::invalid_argument(s + " circle: through-block count out of range");
  }
}

std::vector<int> interval_index(const std::vector<int>& lengths) {
  std::vector<int> idx;
  for (size_t r = 0; r < lengths.size(); ++r) idx.insert(idx.end(), lengths[r], static_cast<int>(r));
  return idx;
}

bool passes_filter(const AnnularPerm& a, const ColoredAnnularSpec& spec) {
  if (spec.outer_through && through_counts(a, spec.outer_lengths, true) != *spec.outer_through) return false;
  if (spec.inner_through && through_counts(a, spec.inner_lengths, false) != *spec.inner_through) return false;
  return true;
}

}  // namespace

int ColoredAnnularSpec::outer_size() const { return total(outer_lengths); }
int ColoredAnnularSpec::inner_size() const { return total(inner_lengths); }

void ColoredAnnularSpec::validate() const {
  validate_side(outer_lengths, outer_colors, outer_through, "outer");
  validate_side(inner_lengths, inner_colors, inner_through, "inner");
}

std::vector<int> expand_colors(const std::vector<int>& lengths, const std::vector<int>& colors) {
  std::vector<int> out;
  for (size_t r = 0; r < lengths.size(); ++r) out.insert(out.end(), lengths[r], colors[r]);
  return out;
}

std::vector<int> through_counts(const AnnularPerm& a, const std::vector<int>& lengths, bool outer) {
  const int m = a.outer_size();
  const std::vector<int> idx = interval_index(lengths);
  std::vector<std::set<int>> hit(lengths.size());
  for (auto& cyc : a.perm().cycles()) {
    if (!a.is_through_block(cyc)) continue;
    for (int x : cyc) {
      bool on_outer = x <= m;
      if (on_outer != outer) continue;
      int local = outer ? x - 1 : x - m - 1;
      hit[idx[local]].insert(cyc.front());
    }
  }
  std::vector<int> out;
  for (auto& s : hit) out.push_back(static_cast<int>(s.size()));
  return out;
}

std::vector<AnnularPerm> enum_colored_snc(const ColoredAnnularSpec& spec, int cap) {
  spec.validate();
  std::vector<AnnularPerm> out;
  for (auto& a : enum_snc_colored(expand_colors(spec.outer_lengths, spec.outer_colors),
                                  expand_colors(spec.inner_lengths, spec.inner_colors), cap))
    if (passes_filter(a, spec)) out.push_back(a);
  return out;
}

PolyC colored_weight(const ColoredAnnularSpec& spec, int cap) {
  if (spec.outer_size() == 0 || spec.inner_size() == 0) return {};
  if (spec.outer_through)
    for (size_t r = 0; r < spec.outer_lengths.size(); ++r)
      if (spec.outer_lengths[r] == 0 && (*spec.outer_through)[r] != 0) return {};
  if (spec.inner_through)
    for (size_t r = 0; r < spec.inner_lengths.size(); ++r)
      if (spec.inner_lengths[r] == 0 && (*spec.inner_through)[r] != 0) return {};
  return weighted_count(
      enum_snc_colored(expand_colors(spec.outer_lengths, spec.outer_colors),
                       expand_colors(spec.inner_lengths, spec.inner_colors), cap),
      [&](const AnnularPerm& a) { return passes_filter(a, spec) ? a.perm().cycle_count() : -1; });
}

std::vector<CircularHalfPerm> enum_colored_ncc(const std::vector<int>& lengths, const std::vector<int>& colors,
                                               int cap) {
  const int m = total(lengths);
  const std::vector<int> col = expand_colors(lengths, colors);
  const std::vector<int> idx = interval_index(lengths);
  std::vector<CircularHalfPerm> out;
  for (int k = 1; k <= m; ++k)
    for (auto& h : enum_ncc(m, k, cap)) {
      bool mono = true;
      for (auto& cyc : h.perm().cycles())
        for (int x : cyc) mono &= col[x - 1] == col[cyc.front() - 1];
      if (!mono) continue;
      std::vector<char> met(lengths.size(), 0);
      for (auto& b : h.open_blocks())
        for (int x : b) met[idx[x - 1]] = 1;
      if (std::all_of(met.begin(), met.end(), [](char v) { return v != 0; })) out.push_back(h);
    }
  return out;
}

LinearHalfPerm restrict_to_interval(const CircularHalfPerm& h, const std::vector<int>& lengths, int r) {
  int start = 1;
  for (int i = 0; i < r; ++i) start += lengths[i];
  const int len = lengths[r];
  std::vector<int> local(h.size() + 1, 0);
  for (int i = 0; i < len; ++i) local[start + i] = i + 1;
  std::vector<std::vector<int>> cycles;
  std::vector<int> opens;
  for (auto& cyc : h.perm().cycles()) {
    if (local[cyc.front()] == 0) {
      for (int x : cyc)
        if (local[x] != 0) throw std::invalid_argument("restriction: block meets several intervals");
      continue;
    }
    std::vector<int> lc;
    for (int x : cyc) {
      if (local[x] == 0) throw std::invalid_argument("restriction: block meets several intervals");
      lc.push_back(local[x]);
    }
    if (h.is_open(cyc.front())) opens.push_back(lc.front());
    cycles.push_back(std::move(lc));
  }
  return LinearHalfPerm(Perm::from_cycles(len, cycles), opens);
}

}  // namespace halfperm
