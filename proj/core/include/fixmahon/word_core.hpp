#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fixmahon/word.hpp"

namespace fixmahon {

/// Compares w1^inf with w2^inf lexicographically (the omega order). Both
/// words must be nonempty. Equal exactly when they are powers of a common word.
std::strong_ordering omega_compare(const Word& w1, const Word& w2);

/// Max convention: strictly greater than each of its proper rotations.
bool is_lyndon(const Word& w);

/// 1-based index of the rightmost minimal letter: the position p with
/// x_{p-1} > x_p <= x_{p+1} <= ... <= x_n. Throws when no such p exists.
std::size_t rmin(const Word& w);

struct LyndonFactorization {
  std::vector<Word> factors;
};

/// Unique factorization into omega-nondecreasing max-Lyndon words.
LyndonFactorization lyndon_factorize(const Word& w);

struct Decreases {
  std::size_t count = 0;
  std::vector<std::size_t> positions;  // 1-based, increasing
};
Decreases decreases(const Word& w);
std::size_t dec(const Word& w);

struct SingleStat {
  Word single_word;  // one-letter factors, nonincreasing
  std::size_t single = 0;
};
SingleStat single_stat(const Word& w);

bool is_niw(const Word& w);
bool is_v_word(const Word& w);
bool is_u_word(const Word& w);
bool is_l_word(const Word& w);
bool is_h_word(const Word& w);
bool has_distinct_letters(const Word& w);
// These two require distinct letters.
bool is_desarrangement_word(const Word& w);
bool is_hook_word(const Word& w);

struct WordClass {
  bool niw = false;
  bool v_word = false;
  bool u_word = false;
  bool l_word = false;
  bool h_word = false;
  bool desarrangement = false;
  bool hook = false;
};
/// The desarrangement and hook flags are false for words with repeated letters.
WordClass classify(const Word& w);

struct HFactorization {
  Word head;
  std::vector<Word> hooks;
};
HFactorization h_factorize(const Word& w);

std::size_t inv(const Word& w);
std::size_t rinv(const Word& w);
std::size_t des(const Word& w);
std::size_t maj(const Word& w);
std::size_t wlec(const Word& w);
std::size_t wpix(const Word& w);

struct WordStats {
  std::uint64_t tot = 0;
  std::size_t inv = 0;
  std::size_t rinv = 0;
  std::size_t maj = 0;
  std::size_t des = 0;
  std::size_t dec = 0;
  std::size_t single = 0;
  std::size_t wlec = 0;
  std::size_t wpix = 0;
};
WordStats word_stats(const Word& w);

/// (w, i) with w nonincreasing, |w| >= 2, 1 <= i <= |w| - 1. The alphabet
/// bound r - 1 on w is supplied by the containing D_n(r).
struct DPair {
  Word word;
  std::size_t index = 0;

  friend bool operator==(const DPair&, const DPair&) = default;
  friend auto operator<=>(const DPair&, const DPair&) = default;
};

struct DStarSequence {
  Word head;
  std::vector<DPair> pairs;

  std::size_t length() const;
  friend bool operator==(const DStarSequence&, const DStarSequence&) = default;
  friend auto operator<=>(const DStarSequence&, const DStarSequence&) = default;
};

bool is_valid_dpair(const DPair& p, Letter r);
bool is_valid_dstar(const DStarSequence& d, Letter r);
void require_valid_dpair(const DPair& p, Letter r);
void require_valid_dstar(const DStarSequence& d, Letter r);
void require_letters_at_most(const Word& w, Letter r);

/// "w0 | w1 : i1 | w2 : i2", words in canonical form.
std::string to_string(const DStarSequence& d);
DStarSequence parse_dstar(std::string_view text);

std::string join_words(const std::vector<Word>& words, std::string_view sep = " | ");

}  // namespace fixmahon
