#pragma once

#include <string>
#include <vector>

#include "fixmahon/perm_core.hpp"
#include "fixmahon/permutation.hpp"
#include "fixmahon/word.hpp"

namespace fixmahon {

/// A permutation together with a nonincreasing word of the same length.
struct StatPair {
  Permutation sigma;
  Word c;

  friend bool operator==(const StatPair&, const StatPair&) = default;
  friend auto operator<=>(const StatPair&, const StatPair&) = default;
};

/// "sigma ; c" in canonical form.
std::string to_string(const StatPair& p);
StatPair parse_stat_pair(std::string_view text);

/// Intermediate rows of the fix-version word-to-permutation map.
struct PsiFixTrace {
  Permutation sigma;
  std::vector<std::size_t> rank;  // rank of each letter occurrence, by position
  Word sorted_letters;            // the letters listed in rank order
  Word z;                         // descents of sigma at or after each position
  Word c;
};
PsiFixTrace psi_fix_trace(const Word& w, Letter r);
StatPair psi_fix(const Word& w, Letter r);
Word psi_fix_inverse(const StatPair& p, Letter r);

struct PsiPixTrace {
  Permutation sigma;  // max-first standardization of w
  Word z;
  Word d;  // w - z
  Word c;  // d sorted nonincreasingly
};
PsiPixTrace psi_pix_trace(const Word& w, Letter r);
StatPair psi_pix(const Word& w, Letter r);
Word psi_pix_inverse(const StatPair& p, Letter r);

/// Labels the largest letters 1, 2, ... from left to right, then the next
/// largest value, and so on.
Permutation standardize_max_first(const Word& w);

Word gamma_x(const Word& v, Letter x);
/// Second fundamental transformation: maj w = inv of the image.
Word phi_second(const Word& w);
Word phi_second_inverse(const Word& w);

/// Sends sigma1 with Iligne contained in the position set of J to sigma2 in
/// the same class with (iexc, fix) sigma2 = (lec, pix) sigma1.
Permutation lec_pix_to_iexc_fix(const Permutation& sigma1, const Composition& J);

/// The word of the class of J attached to sigma: position i gets the
/// sigma(i)-th letter of the composition word.
Word composition_class_word(const Permutation& sigma, const Composition& J);

}  // namespace fixmahon
