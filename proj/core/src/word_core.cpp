#include "fixmahon/word_core.hpp"

#include <algorithm>
#include <set>

#include "fixmahon/error.hpp"

namespace fixmahon {

std::strong_ordering omega_compare(const Word& w1, const Word& w2) {
  if (w1.empty() || w2.empty()) throw PreconditionError("omega comparison of an empty word");
  return (w1 + w2) <=> (w2 + w1);
}

bool is_lyndon(const Word& w) {
  if (w.empty()) throw PreconditionError("Lyndon test of the empty word");
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word rotation = w.slice(i, w.size() - i) + w.slice(0, i);
    if (!(w > rotation)) return false;
  }
  return true;
}

namespace {

// 0-based start of the final weakly increasing run; 0 when the whole word is one.
std::size_t final_run_start(const Word& w) {
  std::size_t p = w.size() - 1;
  while (p > 0 && w[p - 1] <= w[p]) --p;
  return p;
}

}  // namespace

std::size_t rmin(const Word& w) {
  if (w.size() < 2) throw PreconditionError("rmin needs a word of length at least 2");
  std::size_t p = final_run_start(w);
  if (p == 0) throw PreconditionError("rmin undefined for weakly increasing word " + to_string(w));
  return p + 1;
}

// Duval's algorithm with the letter order reversed.
LyndonFactorization lyndon_factorize(const Word& w) {
  LyndonFactorization result;
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && w[k] >= w[j]) {
      k = (w[k] > w[j]) ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      result.factors.push_back(w.slice(i, j - k));
      i += j - k;
    }
  }
  return result;
}

Decreases decreases(const Word& w) {
  Decreases d;
  const std::size_t n = w.size();
  if (n < 2) return d;
  std::vector<bool> flag(n, false);
  for (std::size_t i = n - 1; i-- > 0;)
    flag[i] = w[i] > w[i + 1] || (w[i] == w[i + 1] && flag[i + 1]);
  for (std::size_t i = 0; i < n; ++i)
    if (flag[i]) d.positions.push_back(i + 1);
  d.count = d.positions.size();
  return d;
}

std::size_t dec(const Word& w) { return decreases(w).count; }

SingleStat single_stat(const Word& w) {
  std::vector<Letter> letters;
  for (const Word& f : lyndon_factorize(w).factors)
    if (f.size() == 1) letters.push_back(f[0]);
  std::sort(letters.rbegin(), letters.rend());
  SingleStat s;
  s.single = letters.size();
  s.single_word = Word(std::move(letters));
  return s;
}

bool is_niw(const Word& w) {
  return std::is_sorted(w.begin(), w.end(), std::greater<>());
}

namespace {

// Shared shape of V- and U-words: x_1 >= ... >= x_i > x_{i+1} <= ... <= x_n.
// Returns the break index i (1-based), or 0 when the shape fails.
std::size_t valley_break(const Word& w) {
  if (w.size() < 2) return 0;
  std::size_t p = final_run_start(w);
  if (p == 0) return 0;
  for (std::size_t k = 0; k + 1 < p; ++k)
    if (w[k] < w[k + 1]) return 0;
  return p;
}

}  // namespace

bool is_v_word(const Word& w) {
  std::size_t i = valley_break(w);
  return i != 0 && w.back() < w[i - 1];
}

bool is_u_word(const Word& w) {
  std::size_t i = valley_break(w);
  return i != 0 && w.back() < w.front();
}

bool is_l_word(const Word& w) {
  if (w.size() < 2 || !is_lyndon(w)) return false;
  const Letter top = w.front();
  std::size_t k = 0;
  while (k < w.size() && w[k] == top) ++k;
  return std::find(w.begin() + static_cast<std::ptrdiff_t>(k), w.end(), top) == w.end();
}

bool is_h_word(const Word& w) {
  if (w.size() < 2 || !(w[0] < w[1])) return false;
  for (std::size_t k = 1; k + 1 < w.size(); ++k)
    if (w[k] < w[k + 1]) return false;
  return true;
}

bool has_distinct_letters(const Word& w) {
  std::set<Letter> seen(w.begin(), w.end());
  return seen.size() == w.size();
}

bool is_desarrangement_word(const Word& w) {
  if (!has_distinct_letters(w)) throw PreconditionError("desarrangement test needs distinct letters");
  // first ascent with the convention x_{n+1} = infinity; the empty word ascends at once
  if (w.empty()) return true;
  std::size_t j = 0;
  while (j + 1 < w.size() && w[j] > w[j + 1]) ++j;
  return (j + 1) % 2 == 0;
}

bool is_hook_word(const Word& w) {
  if (!has_distinct_letters(w)) throw PreconditionError("hook test needs distinct letters");
  if (w.size() < 2 || !(w[0] > w[1])) return false;
  for (std::size_t k = 1; k + 1 < w.size(); ++k)
    if (w[k] > w[k + 1]) return false;
  return true;
}

WordClass classify(const Word& w) {
  WordClass c;
  c.niw = is_niw(w);
  c.v_word = is_v_word(w);
  c.u_word = is_u_word(w);
  c.l_word = is_l_word(w);
  c.h_word = is_h_word(w);
  if (has_distinct_letters(w)) {
    c.desarrangement = is_desarrangement_word(w);
    c.hook = is_hook_word(w);
  }
  return c;
}

HFactorization h_factorize(const Word& w) {
  HFactorization h;
  std::size_t end = w.size();
  std::vector<Word> reversed_hooks;
  for (;;) {
    // start of the final nonincreasing run of w[0, end)
    std::size_t k = end;
    if (k == 0) break;
    --k;
    while (k > 0 && w[k - 1] >= w[k]) --k;
    if (k == 0) break;
    reversed_hooks.push_back(w.slice(k - 1, end - k + 1));
    end = k - 1;
  }
  h.head = w.slice(0, end);
  h.hooks.assign(reversed_hooks.rbegin(), reversed_hooks.rend());
  return h;
}

std::size_t inv(const Word& w) {
  std::size_t count = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) ++count;
  return count;
}

std::size_t rinv(const Word& w) {
  std::size_t count = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] < w[b]) ++count;
  return count;
}

std::size_t des(const Word& w) {
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) ++count;
  return count;
}

std::size_t maj(const Word& w) {
  std::size_t total = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) total += i + 1;
  return total;
}

std::size_t wlec(const Word& w) {
  std::size_t total = 0;
  for (const Word& h : h_factorize(w).hooks) total += rinv(h);
  return total;
}

std::size_t wpix(const Word& w) { return h_factorize(w).head.size(); }

WordStats word_stats(const Word& w) {
  WordStats s;
  s.tot = w.total();
  s.inv = inv(w);
  s.rinv = rinv(w);
  s.maj = maj(w);
  s.des = des(w);
  s.dec = dec(w);
  s.single = single_stat(w).single;
  HFactorization h = h_factorize(w);
  s.wpix = h.head.size();
  for (const Word& hook : h.hooks) s.wlec += rinv(hook);
  return s;
}

std::size_t DStarSequence::length() const {
  std::size_t n = head.size();
  for (const DPair& p : pairs) n += p.word.size();
  return n;
}

bool is_valid_dpair(const DPair& p, Letter r) {
  if (r == 0 || p.word.size() < 2 || !is_niw(p.word)) return false;
  if (p.word.front() > r - 1) return false;
  return p.index >= 1 && p.index < p.word.size();
}

bool is_valid_dstar(const DStarSequence& d, Letter r) {
  if (!is_niw(d.head) || (!d.head.empty() && d.head.front() > r)) return false;
  return std::all_of(d.pairs.begin(), d.pairs.end(),
                     [r](const DPair& p) { return is_valid_dpair(p, r); });
}

void require_valid_dpair(const DPair& p, Letter r) {
  if (!is_valid_dpair(p, r))
    throw PreconditionError("(" + to_string(p.word) + ", " + std::to_string(p.index) +
                            ") is not a pair of D(" + std::to_string(r) + ")");
}

void require_valid_dstar(const DStarSequence& d, Letter r) {
  if (!is_niw(d.head) || (!d.head.empty() && d.head.front() > r))
    throw PreconditionError("head " + to_string(d.head) + " is not nonincreasing with letters <= " +
                            std::to_string(r));
  for (const DPair& p : d.pairs) require_valid_dpair(p, r);
}

void require_letters_at_most(const Word& w, Letter r) {
  if (!w.empty() && w.max() > r)
    throw PreconditionError("word " + to_string(w) + " has a letter above " + std::to_string(r));
}

std::string to_string(const DStarSequence& d) {
  std::string out = to_string(d.head);
  for (const DPair& p : d.pairs) out += " | " + to_string(p.word) + " : " + std::to_string(p.index);
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

DStarSequence parse_dstar(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k == text.size() || text[k] == '|') {
      parts.push_back(trim(text.substr(start, k - start)));
      start = k + 1;
    }
  }
  DStarSequence d;
  d.head = parse_word(parts[0]);
  for (std::size_t k = 1; k < parts.size(); ++k) {
    auto colon = parts[k].find(':');
    if (colon == std::string_view::npos)
      throw ParseError("bad token '" + std::string(parts[k]) + "': expected 'word : index'");
    DPair p;
    p.word = parse_word(trim(parts[k].substr(0, colon)));
    Word index = parse_word(trim(parts[k].substr(colon + 1)));
    if (index.size() != 1)
      throw ParseError("bad token '" + std::string(parts[k].substr(colon + 1)) + "': expected one index");
    p.index = index[0];
    d.pairs.push_back(std::move(p));
  }
  return d;
}

std::string join_words(const std::vector<Word>& words, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (k) out += sep;
    out += to_string(words[k]);
  }
  return out;
}

}  // namespace fixmahon
