#include "halfperm/wick/wick.hpp"

#include <stdexcept>

namespace halfperm {

FockBatch apply_wick(const FockSpace& space, const Word& word, const FockBatch& x) {
  if (static_cast<int>(word.size()) > space.depth()) throw std::invalid_argument("word exceeds Fock space depth");
  if (word.empty()) return x;
  const TracialAlgebra& alg = space.algebra();
  const Element& d = word.front();
  const Word rest(word.begin() + 1, word.end());
  FockBatch w_rest = apply_wick(space, rest, x);
  FockBatch out = space.p(d, w_rest) - alg.psi(d) * w_rest;
  if (!rest.empty()) {
    const Element dd1 = alg.multiply(d, rest.front());
    const Word tail(rest.begin() + 1, rest.end());
    Word merged = tail;
    merged.insert(merged.begin(), dd1);
    out -= alg.psi(dd1) * apply_wick(space, tail, x);
    out -= apply_wick(space, merged, x);
  }
  return out;
}

FockBatch apply_w_pi(const FockSpace& space, const LinearHalfPerm& pi, const Word& word, const FockBatch& x) {
  if (pi.size() != static_cast<int>(word.size())) throw std::invalid_argument("W_pi: word length differs from pi");
  const TracialAlgebra& alg = space.algebra();
  Complex scalar = 1;
  Word open;
  for (const auto& cyc : pi.perm().cycles()) {
    Element prod = word[cyc.front() - 1];
    for (size_t i = 1; i < cyc.size(); ++i) prod = alg.multiply(prod, word[cyc[i] - 1]);
    if (pi.is_open(cyc.front())) open.push_back(std::move(prod));
    else scalar *= alg.psi(prod);
  }
  // cycles() is ordered by smallest element, so `open` is in left-to-right order.
  return scalar * apply_wick(space, open, x);
}

FockBatch apply_p_word(const FockSpace& space, const Word& word, const FockBatch& x) {
  FockBatch y = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) y = space.p(*it, y);
  return y;
}

Word adjoint_word(const TracialAlgebra& algebra, const Word& word) {
  Word out;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(algebra.star(*it));
  return out;
}

}  // namespace halfperm
