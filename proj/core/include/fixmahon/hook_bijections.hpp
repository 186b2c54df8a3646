#pragma once

#include "fixmahon/word.hpp"
#include "fixmahon/word_core.hpp"

namespace fixmahon {

/// h = x_{i+1} (x_1+1) ... (x_i+1) x_{i+2} ... x_n.
Word d_pair_to_h(const DPair& p);
/// Inverse of d_pair_to_h; the index is rinv(h).
DPair h_to_d_pair(const Word& h);

/// Head followed by the H-words of the pairs.
Word phi_pix(const DStarSequence& d, Letter r);
DStarSequence phi_pix_inverse(const Word& w, Letter r);

/// phi_pix composed with the inverse of phi_fix. Permutes each rearrangement
/// class and carries (dec, single) to (wlec, wpix).
Word transform_f(const Word& w, Letter r);
Word transform_f_inverse(const Word& w, Letter r);
/// Same maps with r taken as the largest letter of w.
Word transform_f(const Word& w);
Word transform_f_inverse(const Word& w);

}  // namespace fixmahon
