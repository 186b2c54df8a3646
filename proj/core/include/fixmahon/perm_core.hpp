#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fixmahon/permutation.hpp"
#include "fixmahon/word.hpp"

namespace fixmahon {

std::size_t exc(const Permutation& sigma);
std::size_t fix(const Permutation& sigma);
std::size_t des(const Permutation& sigma);
std::size_t maj(const Permutation& sigma);
std::size_t inv(const Permutation& sigma);
PositionSet ligne(const Permutation& sigma);
PositionSet iligne(const Permutation& sigma);

struct HookFactorizationP {
  Word prefix;
  std::vector<Word> hooks;
};
/// Right-to-left: peel off the shortest desarrangement suffix each time.
HookFactorizationP hook_factorize(const Permutation& sigma);
std::size_t lec(const Permutation& sigma);
std::size_t pix(const Permutation& sigma);

struct PermStats {
  std::size_t exc = 0, des = 0, maj = 0, fix = 0, inv = 0;
  std::size_t ides = 0, imaj = 0, iexc = 0;
  PositionSet ligne, iligne;
  std::size_t lec = 0, pix = 0;
};
PermStats perm_stats(const Permutation& sigma);

struct ZStats {
  std::size_t dez = 0, maz = 0, maf = 0;
};
/// dez and maz are des and maj of the word with fixed points replaced by 0;
/// maf adds the shifted fixed-point positions to maj of the word with them removed.
ZStats z_stats(const Permutation& sigma);

/// l_i = number of consecutive letters after sigma(i) that are all smaller.
Word lac(const Permutation& sigma);
Word ilac(const Permutation& sigma);

Permutation complement(const Permutation& sigma);
Permutation reverse(const Permutation& sigma);
/// Cycles written from their maximum along the inverse orbit, concatenated
/// by increasing maximum. Satisfies (exc, fix) sigma = (des, single) of the result.
Permutation first_fundamental(const Permutation& sigma);

enum class Symmetry { inverse, complement, reverse, first_fundamental };
Permutation apply_symmetry(const Permutation& sigma, Symmetry which);

class Composition {
 public:
  explicit Composition(std::vector<std::size_t> parts);
  /// "455116" (digits) or "4 5 5 1 1 6".
  static Composition parse(std::string_view text);
  const std::vector<std::size_t>& parts() const noexcept { return parts_; }
  std::size_t total() const noexcept;

 private:
  std::vector<std::size_t> parts_;
};

/// Partial sums from the right: j_m, j_m + j_{m-1}, ..., j_m + ... + j_1.
PositionSet composition_positions(const Composition& J);
/// m^{j_m} (m-1)^{j_{m-1}} ... 1^{j_1}.
Word composition_word(const Composition& J);
/// Every sigma in S_n with Iligne sigma contained in the position set of J.
std::vector<Permutation> composition_class_members(const Composition& J);

}  // namespace fixmahon
