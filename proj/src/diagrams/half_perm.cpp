#include "halfperm/diagrams/half_perm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace halfperm {

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

bool is_cycle_of(const Perm& p, const std::vector<int>& block) {
  if (block.empty()) return false;
  return sorted(cycle_of(p, block.front())) == block;
}

std::string set_to_string(const std::vector<int>& s) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << "}";
  return os.str();
}

}  // namespace

CircularHalfPerm CircularHalfPerm::with_open_blocks(Perm pi, std::vector<int> complement_block,
                                                    const std::vector<int>& open_points) {
  if (!pi.is_noncrossing()) throw std::invalid_argument("half-permutation: permutation is crossing");
  if (open_points.empty()) throw std::invalid_argument("half-permutation: need at least one open block");
  CircularHalfPerm h;
  h.reference_ = sorted(std::move(complement_block));
  if (!is_cycle_of(kreweras(pi), h.reference_))
    throw std::invalid_argument("half-permutation: reference is not a complement cycle");
  std::vector<char> in_ref(pi.size() + 1, 0);
  for (int r : h.reference_) in_ref[r] = 1;
  for (int p : open_points) {
    if (p < 1 || p > pi.size()) throw std::invalid_argument("half-permutation: open point out of range");
    int hit = 0, init = 0;
    for (int q : cycle_of(pi, p))
      if (in_ref[q]) ++hit, init = q;
    if (hit != 1) throw std::invalid_argument("half-permutation: open block does not meet the reference cycle once");
    h.open_initials_.push_back(init);
  }
  std::sort(h.open_initials_.begin(), h.open_initials_.end());
  if (std::adjacent_find(h.open_initials_.begin(), h.open_initials_.end()) != h.open_initials_.end())
    throw std::invalid_argument("half-permutation: repeated open block");
  h.pi_ = std::move(pi);
  return h;
}

CircularHalfPerm CircularHalfPerm::with_designated(Perm pi, Designation where, std::vector<int> block) {
  if (!pi.is_noncrossing()) throw std::invalid_argument("half-permutation: permutation is crossing");
  CircularHalfPerm h;
  h.reference_ = sorted(std::move(block));
  h.designation_ = where;
  if (where == Designation::InPerm) {
    if (!is_cycle_of(pi, h.reference_)) throw std::invalid_argument("designated block is not a block of pi");
  } else if (where == Designation::InComplement) {
    if (!is_cycle_of(kreweras(pi), h.reference_))
      throw std::invalid_argument("designated block is not a complement block");
  } else {
    throw std::invalid_argument("designation required when there are no open blocks");
  }
  h.pi_ = std::move(pi);
  return h;
}

int CircularHalfPerm::closed_count() const {
  int blocks = pi_.cycle_count();
  if (designation_ == Designation::InPerm) return blocks - 1;
  return blocks - open_count();
}

std::vector<std::vector<int>> CircularHalfPerm::open_blocks() const {
  std::vector<std::vector<int>> out;
  for (int x : open_initials_) out.push_back(sorted(cycle_of(pi_, x)));
  return out;
}

bool CircularHalfPerm::is_open(int point) const {
  for (int x : cycle_of(pi_, point))
    if (std::binary_search(open_initials_.begin(), open_initials_.end(), x)) return true;
  return false;
}

bool CircularHalfPerm::is_designated(int point) const {
  return designation_ == Designation::InPerm && std::binary_search(reference_.begin(), reference_.end(), point);
}

int CircularHalfPerm::initial_point(int point) const {
  const int n = size();
  std::vector<char> in_block(n + 1, 0);
  for (int x : cycle_of(pi_, point)) in_block[x] = 1;
  if (designation_ != Designation::InPerm)
    for (int r : reference_)
      if (in_block[r]) return r;
  if (designation_ == Designation::InPerm && in_block[reference_.front()])
    throw std::logic_error("designated block has no initial point");
  for (int step = 1; step <= n; ++step) {
    int q = (reference_.front() - 1 + step) % n + 1;
    if (in_block[q]) return q;
  }
  throw std::logic_error("initial point not found");
}

bool operator==(const CircularHalfPerm& a, const CircularHalfPerm& b) {
  return a.pi_ == b.pi_ && a.designation_ == b.designation_ && a.reference_ == b.reference_ &&
         a.open_initials_ == b.open_initials_;
}

bool operator<(const CircularHalfPerm& a, const CircularHalfPerm& b) {
  return std::tie(a.pi_, a.designation_, a.reference_, a.open_initials_) <
         std::tie(b.pi_, b.designation_, b.reference_, b.open_initials_);
}

std::string CircularHalfPerm::to_string() const {
  std::ostringstream os;
  os << pi_.to_string();
  if (designation_ == Designation::None) {
    os << " open " << cycles_to_string(open_blocks()) << " ref " << set_to_string(reference_);
  } else {
    os << " designated " << (designation_ == Designation::InPerm ? "block " : "complement ")
       << set_to_string(reference_);
  }
  return os.str();
}

LinearHalfPerm::LinearHalfPerm(Perm pi, const std::vector<int>& open_points) : pi_(std::move(pi)) {
  if (!pi_.is_noncrossing()) throw std::invalid_argument("linear half-permutation: permutation is crossing");
  if (open_points.empty()) return;
  std::vector<int> ref = cycle_of(kreweras(pi_), 1);
  std::vector<char> in_ref(pi_.size() + 1, 0);
  for (int r : ref) in_ref[r] = 1;
  for (int p : open_points) {
    if (p < 1 || p > pi_.size()) throw std::invalid_argument("linear half-permutation: open point out of range");
    auto block = cycle_of(pi_, p);
    int hit = 0;
    for (int q : block) hit += in_ref[q];
    if (hit != 1) throw std::invalid_argument("linear half-permutation: open block misses the complement cycle of 1");
    open_mins_.push_back(block.front());
  }
  std::sort(open_mins_.begin(), open_mins_.end());
  if (std::adjacent_find(open_mins_.begin(), open_mins_.end()) != open_mins_.end())
    throw std::invalid_argument("linear half-permutation: repeated open block");
}

bool LinearHalfPerm::is_open(int point) const {
  return std::binary_search(open_mins_.begin(), open_mins_.end(), cycle_of(pi_, point).front());
}

std::vector<std::vector<int>> LinearHalfPerm::open_blocks() const {
  std::vector<std::vector<int>> out;
  for (int x : open_mins_) out.push_back(cycle_of(pi_, x));
  return out;
}

std::vector<std::vector<int>> LinearHalfPerm::closed_blocks() const {
  std::vector<std::vector<int>> out;
  for (auto& cyc : pi_.cycles())
    if (!std::binary_search(open_mins_.begin(), open_mins_.end(), cyc.front())) out.push_back(cyc);
  return out;
}

CircularHalfPerm LinearHalfPerm::as_circular() const {
  return CircularHalfPerm::with_open_blocks(pi_, cycle_of(kreweras(pi_), 1), open_mins_);
}

std::string LinearHalfPerm::to_string() const {
  return pi_.to_string() + " open " + cycles_to_string(open_blocks());
}

}  // namespace halfperm
