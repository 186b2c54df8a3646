#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fixmahon/word.hpp"
#include "fixmahon/word_core.hpp"

namespace fixmahon {

/// A nonincreasing head word followed by factors of one word class.
template <class Tag>
struct FactorSequence {
  Word head;
  std::vector<Word> factors;

  std::size_t length() const {
    std::size_t n = head.size();
    for (const Word& f : factors) n += f.size();
    return n;
  }
  friend bool operator==(const FactorSequence&, const FactorSequence&) = default;
};

struct VTag {};
struct UTag {};
struct LTag {};
using VStarSequence = FactorSequence<VTag>;
using UStarSequence = FactorSequence<UTag>;
using LStarSequence = FactorSequence<LTag>;

template <class Tag>
std::string to_string(const FactorSequence<Tag>& s) {
  std::string out = to_string(s.head);
  for (const Word& f : s.factors) out += " | " + to_string(f);
  return out;
}

bool is_valid_v_star(const VStarSequence& s);
bool is_valid_u_star(const UStarSequence& s);
bool is_valid_l_star(const LStarSequence& s);

Word d_pair_to_v(const DPair& p);
DPair v_to_d_pair(const Word& v);

VStarSequence d_star_to_v_star(const DStarSequence& d);
DStarSequence v_star_to_d_star(const VStarSequence& s);

/// Inserts v just before the rightmost minimal letter of u; needs rmin letter of u >= max v.
Word merge_uv(const Word& u, const Word& v);
std::pair<Word, Word> split_uv(const Word& x);

UStarSequence v_star_to_u_star(const VStarSequence& s);
VStarSequence u_star_to_v_star(const UStarSequence& s);

/// Inserts u into l after the unique position a at or right of rmin with
/// l_a < u_1 <= l_{a+1}, or appends it when the last letter of l is below u_1.
Word merge_lu(const Word& l, const Word& u);
std::pair<Word, Word> split_lu(const Word& x);

LStarSequence u_star_to_l_star(const UStarSequence& s);
UStarSequence l_star_to_u_star(const LStarSequence& s);

Word l_star_to_word(const LStarSequence& s);
LStarSequence word_to_l_star(const Word& w);

Word phi_fix(const DStarSequence& d, Letter r);
DStarSequence phi_fix_inverse(const Word& w, Letter r);

/// The head and V-words attached to w by the inverse chain.
VStarSequence v_decompose(const Word& w);

}  // namespace fixmahon
