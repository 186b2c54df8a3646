#include "fixmahon/hook_bijections.hpp"

#include "fixmahon/error.hpp"
#include "fixmahon/lyndon_bijections.hpp"

namespace fixmahon {

Word d_pair_to_h(const DPair& p) {
  if (p.word.size() < 2 || !is_niw(p.word) || p.index < 1 || p.index >= p.word.size())
    throw PreconditionError("(" + to_string(p.word) + ", " + std::to_string(p.index) +
                            ") is not a valid pair");
  std::vector<Letter> h;
  h.push_back(p.word[p.index]);
  for (std::size_t k = 0; k < p.index; ++k) h.push_back(p.word[k] + 1);
  for (std::size_t k = p.index + 1; k < p.word.size(); ++k) h.push_back(p.word[k]);
  return Word(std::move(h));
}

DPair h_to_d_pair(const Word& h) {
  if (!is_h_word(h)) throw PreconditionError(to_string(h) + " is not an H-word");
  const std::size_t i = rinv(h);
  std::vector<Letter> x;
  for (std::size_t k = 1; k <= i; ++k) x.push_back(h[k] - 1);
  x.push_back(h[0]);
  for (std::size_t k = i + 1; k < h.size(); ++k) x.push_back(h[k]);
  return DPair{Word(std::move(x)), i};
}

Word phi_pix(const DStarSequence& d, Letter r) {
  require_valid_dstar(d, r);
  Word out = d.head;
  for (const DPair& p : d.pairs) out += d_pair_to_h(p);
  return out;
}

DStarSequence phi_pix_inverse(const Word& w, Letter r) {
  require_letters_at_most(w, r);
  HFactorization h = h_factorize(w);
  DStarSequence d;
  d.head = h.head;
  for (const Word& hook : h.hooks) d.pairs.push_back(h_to_d_pair(hook));
  return d;
}

Word transform_f(const Word& w, Letter r) { return phi_pix(phi_fix_inverse(w, r), r); }

Word transform_f_inverse(const Word& w, Letter r) { return phi_fix(phi_pix_inverse(w, r), r); }

Word transform_f(const Word& w) { return w.empty() ? w : transform_f(w, w.max()); }

Word transform_f_inverse(const Word& w) { return w.empty() ? w : transform_f_inverse(w, w.max()); }

}  // namespace fixmahon
