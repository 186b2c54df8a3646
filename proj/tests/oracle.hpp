#pragma once

// Slow, definition-level reimplementations used to cross-check the library.
// Only the Word, Permutation and Polynomial containers come from the library.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

#include "fixmahon/permutation.hpp"
#include "fixmahon/polynomial.hpp"
#include "fixmahon/word.hpp"

namespace oracle {

using fixmahon::Letter;
using fixmahon::Permutation;
using fixmahon::Word;

inline std::vector<Letter> letters(const Word& w) { return {w.begin(), w.end()}; }

inline std::vector<std::uint32_t> values(const Permutation& p) {
  return {p.values().begin(), p.values().end()};
}

inline Word repeat_to(const Word& w, std::size_t length) {
  std::vector<Letter> out;
  while (out.size() < length) out.push_back(w[out.size() % w.size()]);
  return Word(out);
}

// w1^inf vs w2^inf: a prefix of length 2 * |w1| * |w2| decides.
inline int omega_cmp(const Word& a, const Word& b) {
  std::size_t len = 2 * a.size() * b.size();
  Word x = repeat_to(a, len), y = repeat_to(b, len);
  if (x < y) return -1;
  if (y < x) return 1;
  return 0;
}

inline bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word rot = w.slice(k, w.size() - k) + w.slice(0, k);
    if (!(w > rot)) return false;
  }
  return true;
}

// Tries every split into Lyndon factors; the valid one is unique.
inline bool lyndon_search(const Word& w, std::size_t pos, std::vector<Word>& acc,
                          std::vector<Word>& out) {
  if (pos == w.size()) {
    out = acc;
    return true;
  }
  for (std::size_t len = 1; pos + len <= w.size(); ++len) {
    Word f = w.slice(pos, len);
    if (!oracle::is_lyndon(f)) continue;
    if (!acc.empty() && omega_cmp(acc.back(), f) > 0) continue;
    acc.push_back(f);
    if (lyndon_search(w, pos + len, acc, out)) return true;
    acc.pop_back();
  }
  return false;
}

inline std::vector<Word> lyndon_factors(const Word& w) {
  std::vector<Word> acc, out;
  lyndon_search(w, 0, acc, out);
  return out;
}

// i is a decrease when x_i = ... = x_j > x_{j+1} for some j >= i.
inline std::vector<std::size_t> decrease_positions(const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::size_t j = i;
    while (j + 1 < w.size() && w[j + 1] == w[i]) ++j;
    if (j + 1 < w.size() && w[j + 1] < w[i]) out.push_back(i + 1);
  }
  return out;
}

inline std::size_t word_inv(const Word& w) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) n += w[i] > w[j];
  return n;
}

inline std::size_t word_maj(const Word& w) {
  std::size_t m = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) m += i + 1;
  return m;
}

inline std::size_t word_des(const Word& w) {
  std::size_t d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
  return d;
}

inline std::uint64_t word_tot(const Word& w) {
  return std::accumulate(w.begin(), w.end(), std::uint64_t{0});
}

inline bool nonincreasing(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) return false;
  return true;
}

inline std::vector<Letter> sorted_letters(const Word& w) {
  auto v = letters(w);
  std::sort(v.begin(), v.end());
  return v;
}

inline Permutation inverse(const Permutation& p) {
  std::vector<std::uint32_t> inv(p.size());
  for (std::size_t i = 1; i <= p.size(); ++i) inv[p(i) - 1] = static_cast<std::uint32_t>(i);
  return Permutation(inv);
}

inline std::size_t exc(const Permutation& p) {
  std::size_t e = 0;
  for (std::size_t i = 1; i <= p.size(); ++i) e += p(i) > i;
  return e;
}

inline std::size_t fix(const Permutation& p) {
  std::size_t f = 0;
  for (std::size_t i = 1; i <= p.size(); ++i) f += p(i) == i;
  return f;
}

inline std::vector<std::size_t> descent_set(const Permutation& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) out.push_back(i);
  return out;
}

inline std::size_t sum(const std::vector<std::size_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::size_t{0});
}

// A desarrangement has distinct letters and an even first ascent position
// (an ascent is assumed after the last letter).
inline bool desarrangement(const Word& w) {
  std::size_t k = 0;
  while (k + 1 < w.size() && w[k] > w[k + 1]) ++k;
  return (k + 1) % 2 == 0 || w.empty();
}

// Hook factorization by exhaustive search: sigma = p tau_1 ... tau_k with p
// increasing and each tau a hook (x_1 > x_2 < x_3 < ... ). Returns the
// prefix length and the sum of inv over the hooks.
inline std::pair<std::size_t, std::size_t> pix_lec(const Permutation& p) {
  Word w = p.as_word();
  std::size_t n = w.size();
  auto is_hook = [](const Word& h) {
    if (h.size() < 2 || h[0] <= h[1]) return false;
    for (std::size_t i = 1; i + 1 < h.size(); ++i)
      if (h[i] >= h[i + 1]) return false;
    return true;
  };
  // the prefix is the longest increasing run at the start that leaves a hook-factorable rest
  for (std::size_t plen = n + 1; plen-- > 0;) {
    bool inc = true;
    for (std::size_t i = 0; i + 1 < plen; ++i) inc &= w[i] < w[i + 1];
    if (!inc) continue;
    // split the rest greedily from the right into hooks: every hook starts at a descent
    std::vector<std::size_t> starts;
    bool ok = true;
    std::size_t end = n;
    while (end > plen) {
      std::size_t s = end;
      bool found = false;
      while (s-- > plen) {
        if (is_hook(w.slice(s, end - s))) {
          found = true;
          break;
        }
      }
      if (!found) {
        ok = false;
        break;
      }
      starts.push_back(s);
      end = s;
    }
    if (!ok) continue;
    std::size_t lec = 0;
    end = n;
    for (std::size_t s : starts) {
      lec += oracle::word_inv(w.slice(s, end - s));
      end = s;
    }
    return {plen, lec};
  }
  return {0, 0};
}

inline fixmahon::Polynomial monomial_poly(std::uint32_t s, std::uint32_t t, std::uint32_t q,
                                          std::uint32_t y) {
  return fixmahon::Polynomial::term(1, fixmahon::monomial(s, t, q, y));
}

inline void next_word(std::vector<Letter>& w, Letter r, bool& done) {
  std::size_t i = w.size();
  while (i > 0) {
    --i;
    if (w[i] < r) {
      ++w[i];
      return;
    }
    w[i] = 0;
  }
  done = true;
}

template <class F>
void each_word(std::size_t n, Letter r, F f) {
  std::vector<Letter> w(n, 0);
  bool done = false;
  while (!done) {
    f(Word(w));
    next_word(w, r, done);
  }
}

template <class F>
void each_permutation(std::size_t n, F f) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 1u);
  do f(Permutation(v));
  while (std::next_permutation(v.begin(), v.end()));
}

// Sum over S_n of s^exc t^des q^maj Y^fix, straight from the definitions.
inline fixmahon::Polynomial a_n(std::size_t n) {
  fixmahon::Polynomial sum;
  each_permutation(n, [&](const Permutation& p) {
    auto d = descent_set(p);
    sum += monomial_poly(static_cast<std::uint32_t>(oracle::exc(p)), static_cast<std::uint32_t>(d.size()),
                         static_cast<std::uint32_t>(oracle::sum(d)), static_cast<std::uint32_t>(oracle::fix(p)));
  });
  return sum;
}

// Gaussian binomial [n + k over k] as the q^tot generating sum over
// nonincreasing words of length k with letters at most n.
inline fixmahon::Polynomial gauss(std::size_t top, std::size_t bottom) {
  fixmahon::Polynomial sum;
  if (bottom > top) return sum;
  Letter r = static_cast<Letter>(top - bottom);
  each_word(bottom, r, [&](const Word& w) {
    if (oracle::nonincreasing(w)) sum += monomial_poly(0, 0, static_cast<std::uint32_t>(oracle::word_tot(w)), 0);
  });
  return sum;
}

}  // namespace oracle
