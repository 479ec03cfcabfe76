#include "halfperm/diagrams/dots.hpp"

#include <algorithm>
#include <stdexcept>

namespace halfperm {

int DotStructure::black_primed() const {
  return static_cast<int>(std::count(primed.begin(), primed.end(), Dot::Black));
}

int DotStructure::white_unprimed() const {
  return static_cast<int>(std::count(unprimed.begin(), unprimed.end(), Dot::White));
}

bool DotStructure::well_formed() const {
  return n >= 1 && static_cast<int>(unprimed.size()) == n && static_cast<int>(primed.size()) == n && k() >= 0;
}

std::string DotStructure::to_string() const {
  std::string s;
  for (Dot d : unprimed) s += d == Dot::White ? 'W' : 'B';
  s += '/';
  for (Dot d : primed) s += d == Dot::White ? 'W' : 'B';
  return s;
}

DotStructure DotStructure::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos || 2 * slash + 1 != s.size()) throw std::invalid_argument("bad dot structure: " + s);
  DotStructure d;
  d.n = static_cast<int>(slash);
  auto dot = [&](char ch) {
    if (ch == 'W') return Dot::White;
    if (ch == 'B') return Dot::Black;
    throw std::invalid_argument("bad dot character in: " + s);
  };
  for (size_t i = 0; i < slash; ++i) {
    d.unprimed.push_back(dot(s[i]));
    d.primed.push_back(dot(s[slash + 1 + i]));
  }
  return d;
}

DotStructure dot_encode(const CircularHalfPerm& h) {
  const int n = h.size();
  const Perm inv = h.perm().inverse();
  DotStructure d{n, std::vector<Dot>(n, Dot::Black), std::vector<Dot>(n, Dot::White)};
  for (const auto& block : h.perm().cycles()) {
    if (h.is_designated(block.front())) continue;  // black unprimed, white primed
    int init = h.initial_point(block.front());
    d.unprimed[init - 1] = Dot::White;
    if (!h.is_open(block.front())) d.primed[inv(init) - 1] = Dot::Black;
  }
  return d;
}

namespace {

// Cyclic bracket matching over `seq` (+1 opens, -1 closes, 0 ignored); returns (opener, closer) index pairs.
std::vector<std::pair<int, int>> cyclic_match(const std::vector<int>& seq) {
  const int len = static_cast<int>(seq.size());
  int run = 0, min_run = 0, start = 0;
  for (int i = 0; i < len; ++i) {
    run += seq[i];
    if (run < min_run) min_run = run, start = (i + 1) % len;
  }
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> stack;
  for (int t = 0; t < len; ++t) {
    int i = (start + t) % len;
    if (seq[i] > 0) {
      stack.push_back(i);
    } else if (seq[i] < 0) {
      if (stack.empty()) throw std::logic_error("unmatched closer");
      pairs.emplace_back(stack.back(), i);
      stack.pop_back();
    }
  }
  return pairs;
}

}  // namespace

CircularHalfPerm dot_decode(const DotStructure& d) {
  if (!d.well_formed()) throw std::invalid_argument("malformed dot structure: " + d.to_string());
  const int n = d.n;
  auto is_white = [&](int pos) {
    return (pos % 2 == 0 ? d.unprimed[pos / 2] : d.primed[pos / 2]) == Dot::White;
  };
  std::vector<int> images(n, 0);
  std::vector<char> used(2 * n, 0);
  auto connect = [&](int a, int b) {
    int primed = a % 2 ? a : b, unprimed = a % 2 ? b : a;
    if (primed % 2 == 0 || unprimed % 2 == 1) throw std::logic_error("dot matching paired equal parities");
    images[primed / 2] = unprimed / 2 + 1;
    used[a] = used[b] = 1;
  };

  std::vector<int> seq(2 * n);
  for (int p = 0; p < 2 * n; ++p) seq[p] = is_white(p) ? 1 : -1;
  for (auto [w, b] : cyclic_match(seq)) connect(w, b);

  std::vector<int> rest(2 * n, 0);
  for (int p = 0; p < 2 * n; ++p)
    if (!used[p]) rest[p] = p % 2 == 0 ? 1 : -1;
  for (auto [u, p] : cyclic_match(rest)) connect(u, p);

  Perm pi(images);
  auto has_white_unprimed = [&](const std::vector<int>& block) {
    for (int x : block)
      if (d.unprimed[x - 1] == Dot::White) return true;
    return false;
  };

  if (d.k() > 0) {
    std::vector<int> open_initials;
    for (const auto& block : pi.cycles()) {
      bool closed = false;
      for (int x : block) closed |= d.primed[x - 1] == Dot::Black;
      if (closed) continue;
      for (int x : block)
        if (d.unprimed[x - 1] == Dot::White) open_initials.push_back(x);
    }
    if (open_initials.empty()) throw std::logic_error("decoded no open blocks");
    return CircularHalfPerm::with_open_blocks(pi, cycle_of(kreweras(pi), open_initials.front()), open_initials);
  }

  std::vector<std::vector<int>> bare;
  for (const auto& block : pi.cycles())
    if (!has_white_unprimed(block)) bare.push_back(block);
  if (bare.size() > 1) throw std::logic_error("decoded several designated blocks");
  if (bare.size() == 1) return CircularHalfPerm::with_designated(pi, Designation::InPerm, bare.front());

  // Designated complement block: points whose clockwise running white-minus-black count never dips below zero.
  std::vector<int> members;
  for (int i = 1; i <= n; ++i) {
    int run = 0;
    bool ok = true;
    for (int t = 0; t < 2 * n && ok; ++t) {
      run += seq[(2 * (i - 1) + t) % (2 * n)];
      ok = run >= 0;
    }
    if (ok) members.push_back(i);
  }
  return CircularHalfPerm::with_designated(pi, Designation::InComplement, members);
}

std::vector<DotStructure> enumerate_dot_structures(int n, int j, int k) {
  std::vector<DotStructure> out;
  if (n < 1 || j < 0 || k < 0 || j > n || j + k > n) return out;
  for (unsigned up = 0; up < (1u << n); ++up) {
    if (__builtin_popcount(up) != j + k) continue;
    for (unsigned pr = 0; pr < (1u << n); ++pr) {
      if (__builtin_popcount(pr) != j) continue;
      DotStructure d{n, std::vector<Dot>(n), std::vector<Dot>(n)};
      for (int i = 0; i < n; ++i) {
        d.unprimed[i] = (up >> i & 1) ? Dot::White : Dot::Black;
        d.primed[i] = (pr >> i & 1) ? Dot::Black : Dot::White;
      }
      out.push_back(std::move(d));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace halfperm
