#include "fixmahon/perm_bijections.hpp"

#include <algorithm>
#include <numeric>

#include "fixmahon/error.hpp"
#include "fixmahon/hook_bijections.hpp"
#include "fixmahon/word_core.hpp"

namespace fixmahon {

std::string to_string(const StatPair& p) { return to_string(p.sigma) + " ; " + to_string(p.c); }

StatPair parse_stat_pair(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos)
    throw ParseError("bad token '" + std::string(text) + "': expected 'sigma ; c'");
  return StatPair{parse_permutation(text.substr(0, semi)), parse_word(text.substr(semi + 1))};
}

namespace {

// z_i = number of descents of sigma at positions >= i.
Word descents_to_the_right(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  std::vector<Letter> z(n, 0);
  for (std::size_t i = n; i-- > 1;) z[i - 1] = z[i] + (sigma(i) > sigma(i + 1) ? 1 : 0);
  return Word(std::move(z));
}

Word minus(const Word& a, const Word& b) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) throw InternalError("negative letter in difference");
    out.push_back(a[i] - b[i]);
  }
  return Word(std::move(out));
}

Word plus(const Word& a, const Word& b) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return Word(std::move(out));
}

void require_stat_pair(const StatPair& p, Letter r, std::size_t bound_stat) {
  if (p.c.size() != p.sigma.size())
    throw PreconditionError("sigma and c have different lengths");
  if (!is_niw(p.c)) throw PreconditionError(to_string(p.c) + " is not nonincreasing");
  if (bound_stat > r || (!p.c.empty() && p.c.front() > r - bound_stat))
    throw PreconditionError("pair " + to_string(p) + " is out of range for r = " + std::to_string(r));
}

// pos_of[v] = 0-based position of value v.
std::vector<std::size_t> positions_of(const Permutation& sigma) {
  std::vector<std::size_t> pos(sigma.size() + 1, 0);
  for (std::size_t i = 1; i <= sigma.size(); ++i) pos[sigma(i)] = i - 1;
  return pos;
}

Word pix_offsets(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  std::vector<Letter> z(n, 0);
  auto pos = positions_of(sigma);
  for (std::size_t v = n; v-- > 1;) {
    std::size_t j = pos[v], k = pos[v + 1];
    z[j] = j < k ? z[k] : z[k] + 1;
  }
  return Word(std::move(z));
}

}  // namespace

PsiFixTrace psi_fix_trace(const Word& w, Letter r) {
  require_letters_at_most(w, r);
  const std::size_t n = w.size();
  auto factors = lyndon_factorize(w).factors;

  struct Occurrence {
    Word cyc;
    std::size_t pos;
  };
  std::vector<Occurrence> occ;
  std::vector<std::size_t> factor_start;
  for (std::size_t pos = 0; const Word& f : factors) {
    factor_start.push_back(pos);
    for (std::size_t j = 0; j < f.size(); ++j)
      occ.push_back({f.slice(j, f.size() - j) + f.slice(0, j), pos + j});
    pos += f.size();
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto c = omega_compare(occ[a].cyc, occ[b].cyc);
    if (c != 0) return c > 0;
    return occ[a].pos > occ[b].pos;
  });

  PsiFixTrace t;
  t.rank.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) t.rank[order[k]] = k + 1;
  std::vector<std::uint32_t> sigma(n, 0);
  for (std::size_t fi = 0; fi < factors.size(); ++fi) {
    const std::size_t start = factor_start[fi], len = factors[fi].size();
    for (std::size_t j = 0; j < len; ++j)
      sigma[t.rank[start + j] - 1] = static_cast<std::uint32_t>(t.rank[start + (j + 1) % len]);
  }
  t.sigma = Permutation(std::move(sigma));
  std::vector<Letter> sorted;
  for (std::size_t k : order) sorted.push_back(w[k]);
  t.sorted_letters = Word(std::move(sorted));
  t.z = descents_to_the_right(t.sigma);
  t.c = minus(t.sorted_letters, t.z);
  return t;
}

StatPair psi_fix(const Word& w, Letter r) {
  PsiFixTrace t = psi_fix_trace(w, r);
  return StatPair{std::move(t.sigma), std::move(t.c)};
}

Word psi_fix_inverse(const StatPair& p, Letter r) {
  require_stat_pair(p, r, des(p.sigma));
  const std::size_t n = p.sigma.size();
  Word sorted = plus(p.c, descents_to_the_right(p.sigma));
  // cycles listed from their minima, larger minima first
  std::vector<std::vector<std::uint32_t>> cycles;
  std::vector<bool> seen(n + 1, false);
  for (std::uint32_t m = 1; m <= n; ++m) {
    if (seen[m]) continue;
    std::vector<std::uint32_t> cycle;
    for (std::uint32_t x = m; !seen[x]; x = p.sigma(x)) {
      seen[x] = true;
      cycle.push_back(x);
    }
    cycles.push_back(std::move(cycle));
  }
  std::vector<Letter> out;
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it)
    for (std::uint32_t x : *it) out.push_back(sorted[x - 1]);
  return Word(std::move(out));
}

Permutation standardize_max_first(const Word& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });
  std::vector<std::uint32_t> labels(n);
  for (std::size_t k = 0; k < n; ++k) labels[order[k]] = static_cast<std::uint32_t>(k + 1);
  return Permutation(std::move(labels));
}

PsiPixTrace psi_pix_trace(const Word& w, Letter r) {
  require_letters_at_most(w, r);
  PsiPixTrace t;
  t.sigma = standardize_max_first(w);
  t.z = pix_offsets(t.sigma);
  t.d = minus(w, t.z);
  std::vector<Letter> c(t.d.begin(), t.d.end());
  std::sort(c.rbegin(), c.rend());
  t.c = Word(std::move(c));
  return t;
}

StatPair psi_pix(const Word& w, Letter r) {
  PsiPixTrace t = psi_pix_trace(w, r);
  return StatPair{std::move(t.sigma), std::move(t.c)};
}

Word psi_pix_inverse(const StatPair& p, Letter r) {
  require_stat_pair(p, r, des(p.sigma.inverse()));
  Word z = pix_offsets(p.sigma);
  std::vector<Letter> out;
  for (std::size_t i = 1; i <= p.sigma.size(); ++i) out.push_back(p.c[p.sigma(i) - 1] + z[i - 1]);
  return Word(std::move(out));
}

Word gamma_x(const Word& v, Letter x) {
  if (v.empty()) return v;
  const bool small = v.back() <= x;
  std::vector<Letter> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if ((v[k] <= x) == small) {
      out.push_back(v[k]);
      out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(start),
                 v.begin() + static_cast<std::ptrdiff_t>(k));
      start = k + 1;
    }
  }
  return Word(std::move(out));
}

namespace {

Word gamma_x_inverse(const Word& v, Letter x) {
  if (v.empty()) return v;
  const bool small = v.front() <= x;
  std::vector<Letter> out;
  std::size_t k = 0;
  while (k < v.size()) {
    std::size_t end = k + 1;
    while (end < v.size() && (v[end] <= x) != small) ++end;
    out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(k + 1),
               v.begin() + static_cast<std::ptrdiff_t>(end));
    out.push_back(v[k]);
    k = end;
  }
  return Word(std::move(out));
}

}  // namespace

Word phi_second(const Word& w) {
  Word out;
  for (Letter x : w) {
    out = gamma_x(out, x);
    out.push_back(x);
  }
  return out;
}

Word phi_second_inverse(const Word& w) {
  std::vector<Letter> reversed_result;
  Word rest = w;
  while (!rest.empty()) {
    Letter x = rest.back();
    reversed_result.push_back(x);
    rest = gamma_x_inverse(rest.slice(0, rest.size() - 1), x);
  }
  return Word(reversed_result.rbegin(), reversed_result.rend());
}

Word composition_class_word(const Permutation& sigma, const Composition& J) {
  Word c = composition_word(J);
  if (c.size() != sigma.size())
    throw PreconditionError("composition total differs from the permutation length");
  std::vector<Letter> out;
  for (std::size_t i = 1; i <= sigma.size(); ++i) out.push_back(c[sigma(i) - 1]);
  return Word(std::move(out));
}

Permutation lec_pix_to_iexc_fix(const Permutation& sigma1, const Composition& J) {
  if (J.total() != sigma1.size())
    throw PreconditionError("composition total differs from the permutation length");
  PositionSet allowed = composition_positions(J);
  PositionSet il = iligne(sigma1);
  if (!std::includes(allowed.begin(), allowed.end(), il.begin(), il.end()))
    throw PreconditionError("Iligne of " + to_string(sigma1) + " is not contained in " + to_string(allowed));
  Word w1 = composition_class_word(sigma1, J);
  Word w2 = transform_f_inverse(w1, static_cast<Letter>(J.parts().size()));
  return psi_fix(w2, static_cast<Letter>(J.parts().size())).sigma.inverse();
}

}  // namespace fixmahon
