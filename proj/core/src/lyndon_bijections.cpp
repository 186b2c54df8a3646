#include "fixmahon/lyndon_bijections.hpp"

#include <algorithm>

#include "fixmahon/error.hpp"

namespace fixmahon {

namespace {

Letter rmin_letter(const Word& w) { return w[rmin(w) - 1]; }

// Letters of the word compared in omega order: the letters are themselves L-words.
std::strong_ordering sequence_omega_compare(const std::vector<Word>& a, const std::vector<Word>& b) {
  std::vector<Word> ab = a, ba = b;
  ab.insert(ab.end(), b.begin(), b.end());
  ba.insert(ba.end(), a.begin(), a.end());
  for (std::size_t k = 0; k < ab.size(); ++k) {
    auto c = omega_compare(ab[k], ba[k]);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// Max-convention Lyndon factorization of a sequence whose letters are L-words.
std::vector<std::vector<Word>> factorize_over_words(const std::vector<Word>& seq) {
  std::vector<std::vector<Word>> out;
  const std::size_t n = seq.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n) {
      auto c = omega_compare(seq[k], seq[j]);
      if (c < 0) break;
      k = (c > 0) ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.emplace_back(seq.begin() + static_cast<std::ptrdiff_t>(i),
                       seq.begin() + static_cast<std::ptrdiff_t>(i + j - k));
      i += j - k;
    }
  }
  return out;
}

// Cuts a multi-letter Lyndon factor before each maximal letter that follows a smaller one.
std::vector<Word> split_at_maxima(const Word& f) {
  std::vector<Word> out;
  const Letter top = f.front();
  std::size_t start = 0;
  for (std::size_t k = 1; k < f.size(); ++k) {
    if (f[k] == top && f[k - 1] != top) {
      out.push_back(f.slice(start, k - start));
      start = k;
    }
  }
  out.push_back(f.slice(start, f.size() - start));
  return out;
}

}  // namespace

bool is_valid_v_star(const VStarSequence& s) {
  return is_niw(s.head) && std::all_of(s.factors.begin(), s.factors.end(), is_v_word);
}

bool is_valid_u_star(const UStarSequence& s) {
  if (!is_niw(s.head)) return false;
  for (std::size_t k = 0; k < s.factors.size(); ++k) {
    if (!is_u_word(s.factors[k])) return false;
    if (k + 1 < s.factors.size() && !(rmin_letter(s.factors[k]) < s.factors[k + 1].max())) return false;
  }
  return true;
}

bool is_valid_l_star(const LStarSequence& s) {
  if (!is_niw(s.head)) return false;
  for (std::size_t k = 0; k < s.factors.size(); ++k) {
    if (!is_l_word(s.factors[k])) return false;
    if (k + 1 < s.factors.size() && s.factors[k].max() > s.factors[k + 1].max()) return false;
  }
  return true;
}

Word d_pair_to_v(const DPair& p) {
  if (p.word.size() < 2 || !is_niw(p.word) || p.index < 1 || p.index >= p.word.size())
    throw PreconditionError("(" + to_string(p.word) + ", " + std::to_string(p.index) +
                            ") is not a valid pair");
  std::vector<Letter> y;
  for (std::size_t k = 0; k < p.index; ++k) y.push_back(p.word[k] + 1);
  for (std::size_t k = p.word.size(); k-- > p.index;) y.push_back(p.word[k]);
  return Word(std::move(y));
}

DPair v_to_d_pair(const Word& v) {
  if (!is_v_word(v)) throw PreconditionError(to_string(v) + " is not a V-word");
  std::size_t i = rmin(v) - 1;
  std::vector<Letter> x;
  for (std::size_t k = 0; k < i; ++k) x.push_back(v[k] - 1);
  for (std::size_t k = v.size(); k-- > i;) x.push_back(v[k]);
  return DPair{Word(std::move(x)), i};
}

VStarSequence d_star_to_v_star(const DStarSequence& d) {
  VStarSequence s;
  s.head = d.head;
  for (const DPair& p : d.pairs) s.factors.push_back(d_pair_to_v(p));
  return s;
}

DStarSequence v_star_to_d_star(const VStarSequence& s) {
  DStarSequence d;
  d.head = s.head;
  for (const Word& v : s.factors) d.pairs.push_back(v_to_d_pair(v));
  return d;
}

Word merge_uv(const Word& u, const Word& v) {
  if (!is_u_word(u)) throw PreconditionError(to_string(u) + " is not a U-word");
  if (!is_v_word(v)) throw PreconditionError(to_string(v) + " is not a V-word");
  std::size_t p = rmin(u) - 1;
  if (u[p] < v.max())
    throw PreconditionError("rmin letter of " + to_string(u) + " is below max of " + to_string(v));
  return u.slice(0, p) + v + u.slice(p, u.size() - p);
}

std::pair<Word, Word> split_uv(const Word& x) {
  if (!is_u_word(x)) throw PreconditionError(to_string(x) + " is not a U-word");
  const std::size_t p = rmin(x) - 1;
  const Letter before = x[p - 1];
  std::size_t end = p;
  while (end < x.size() && x[end] < before) ++end;
  if (end == x.size()) throw PreconditionError(to_string(x) + " is not a merge of a U-word and a V-word");
  const Letter y = x[end];
  std::size_t start = p - 1;
  while (start > 0 && x[start - 1] <= y) --start;
  Word u = x.slice(0, start) + x.slice(end, x.size() - end);
  Word v = x.slice(start, end - start);
  if (!is_u_word(u) || !is_v_word(v))
    throw PreconditionError(to_string(x) + " is not a merge of a U-word and a V-word");
  return {u, v};
}

UStarSequence v_star_to_u_star(const VStarSequence& s) {
  if (!is_valid_v_star(s)) throw PreconditionError("invalid V* sequence " + to_string(s));
  UStarSequence out;
  out.head = s.head;
  for (const Word& v : s.factors) {
    if (!out.factors.empty() && rmin_letter(out.factors.back()) >= v.max())
      out.factors.back() = merge_uv(out.factors.back(), v);
    else
      out.factors.push_back(v);
  }
  return out;
}

VStarSequence u_star_to_v_star(const UStarSequence& s) {
  if (!is_valid_u_star(s)) throw PreconditionError("invalid U* sequence " + to_string(s));
  VStarSequence out;
  out.head = s.head;
  for (Word u : s.factors) {
    std::vector<Word> pending;
    while (!is_v_word(u)) {
      auto [rest, v] = split_uv(u);
      pending.push_back(std::move(v));
      u = std::move(rest);
    }
    out.factors.push_back(u);
    out.factors.insert(out.factors.end(), pending.rbegin(), pending.rend());
  }
  return out;
}

Word merge_lu(const Word& l, const Word& u) {
  if (!is_l_word(l)) throw PreconditionError(to_string(l) + " is not an L-word");
  if (!is_u_word(u)) throw PreconditionError(to_string(u) + " is not a U-word");
  const std::size_t p = rmin(l) - 1;
  if (!(l[p] < u.max() && l.max() > u.max()))
    throw PreconditionError("cannot merge " + to_string(l) + " with " + to_string(u));
  if (l.back() < u.front()) return l + u;
  std::size_t a = p;
  while (!(l[a] < u.front() && u.front() <= l[a + 1])) ++a;
  return l.slice(0, a + 1) + u + l.slice(a + 1, l.size() - a - 1);
}

std::pair<Word, Word> split_lu(const Word& x) {
  if (!is_l_word(x)) throw PreconditionError(to_string(x) + " is not an L-word");
  const std::size_t p = rmin(x) - 1;
  std::size_t q = p - 1;
  while (q > 0 && !(x[q - 1] < x[q] && x[q] >= x[q + 1])) --q;
  if (q == 0) throw PreconditionError(to_string(x) + " is not a merge of an L-word and a U-word");
  const Letter head = x[q];
  std::size_t end = p;
  while (end < x.size() && x[end] < head) ++end;
  Word l = x.slice(0, q) + x.slice(end, x.size() - end);
  Word u = x.slice(q, end - q);
  if (!is_l_word(l) || !is_u_word(u))
    throw PreconditionError(to_string(x) + " is not a merge of an L-word and a U-word");
  return {l, u};
}

LStarSequence u_star_to_l_star(const UStarSequence& s) {
  if (!is_valid_u_star(s)) throw PreconditionError("invalid U* sequence " + to_string(s));
  LStarSequence out;
  out.head = s.head;
  Letter group_max = 0;
  for (const Word& u : s.factors) {
    if (!out.factors.empty() && group_max > u.max()) {
      out.factors.back() = merge_lu(out.factors.back(), u);
    } else {
      out.factors.push_back(u);
      group_max = u.max();
    }
  }
  return out;
}

UStarSequence l_star_to_u_star(const LStarSequence& s) {
  if (!is_valid_l_star(s)) throw PreconditionError("invalid L* sequence " + to_string(s));
  UStarSequence out;
  out.head = s.head;
  for (Word l : s.factors) {
    std::vector<Word> pending;
    while (!is_u_word(l)) {
      auto [rest, u] = split_lu(l);
      pending.push_back(std::move(u));
      l = std::move(rest);
    }
    out.factors.push_back(l);
    out.factors.insert(out.factors.end(), pending.rbegin(), pending.rend());
  }
  return out;
}

// L-words sharing a maximum are grouped by the max-Lyndon factorization of
// their sequence (each L-word acting as one letter in omega order); every
// group concatenates to one Lyndon factor of the result.
Word l_star_to_word(const LStarSequence& s) {
  if (!is_valid_l_star(s)) throw PreconditionError("invalid L* sequence " + to_string(s));
  std::vector<Word> parts;
  std::size_t k = 0;
  while (k < s.factors.size()) {
    std::size_t end = k;
    while (end < s.factors.size() && s.factors[end].max() == s.factors[k].max()) ++end;
    std::vector<Word> block(s.factors.begin() + static_cast<std::ptrdiff_t>(k),
                            s.factors.begin() + static_cast<std::ptrdiff_t>(end));
    for (const auto& group : factorize_over_words(block)) {
      Word joined;
      for (const Word& l : group) joined += l;
      parts.push_back(std::move(joined));
    }
    k = end;
  }
  for (Letter x : s.head) parts.push_back(Word{x});
  std::stable_sort(parts.begin(), parts.end(),
                   [](const Word& a, const Word& b) { return omega_compare(a, b) < 0; });
  Word out;
  for (const Word& part : parts) out += part;
  return out;
}

LStarSequence word_to_l_star(const Word& w) {
  LStarSequence out;
  std::vector<Letter> singles;
  std::vector<std::vector<Word>> groups;
  for (const Word& f : lyndon_factorize(w).factors) {
    if (f.size() == 1)
      singles.push_back(f[0]);
    else
      groups.push_back(split_at_maxima(f));
  }
  std::sort(singles.rbegin(), singles.rend());
  out.head = Word(std::move(singles));
  std::stable_sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
    Letter ma = a.front().front(), mb = b.front().front();
    if (ma != mb) return ma < mb;
    return sequence_omega_compare(a, b) < 0;
  });
  for (auto& g : groups) out.factors.insert(out.factors.end(), g.begin(), g.end());
  return out;
}

Word phi_fix(const DStarSequence& d, Letter r) {
  require_valid_dstar(d, r);
  return l_star_to_word(u_star_to_l_star(v_star_to_u_star(d_star_to_v_star(d))));
}

DStarSequence phi_fix_inverse(const Word& w, Letter r) {
  require_letters_at_most(w, r);
  return v_star_to_d_star(v_decompose(w));
}

VStarSequence v_decompose(const Word& w) {
  return u_star_to_v_star(l_star_to_u_star(word_to_l_star(w)));
}

}  // namespace fixmahon
