#pragma once

#include <vector>

#include "halfperm/diagrams/half_perm.hpp"
#include "halfperm/wick/fock.hpp"

namespace halfperm {

using Word = std::vector<Element>;

// W(d_1 (x) ... (x) d_n) x by the four-term recursion; raises degree by at most n.
FockBatch apply_wick(const FockSpace& space, const Word& word, const FockBatch& x);

// psi over closed blocks times W of the open-block products, blocks ordered by smallest
// element and letters multiplied in cycle order; raises degree by at most the open count.
FockBatch apply_w_pi(const FockSpace& space, const LinearHalfPerm& pi, const Word& word, const FockBatch& x);

// p(d_1) ... p(d_n) x.
FockBatch apply_p_word(const FockSpace& space, const Word& word, const FockBatch& x);

// d_1^*, ..., reversed.
Word adjoint_word(const TracialAlgebra& algebra, const Word& word);

}  // namespace halfperm
