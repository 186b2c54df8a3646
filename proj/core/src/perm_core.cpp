#include "fixmahon/perm_core.hpp"

#include <algorithm>
#include <numeric>

#include "fixmahon/enumerate.hpp"
#include "fixmahon/error.hpp"
#include "fixmahon/word_core.hpp"

namespace fixmahon {

std::size_t exc(const Permutation& sigma) {
  std::size_t count = 0;
  for (std::size_t i = 1; i <= sigma.size(); ++i)
    if (sigma(i) > i) ++count;
  return count;
}

std::size_t fix(const Permutation& sigma) {
  std::size_t count = 0;
  for (std::size_t i = 1; i <= sigma.size(); ++i)
    if (sigma(i) == i) ++count;
  return count;
}

std::size_t des(const Permutation& sigma) { return ligne(sigma).size(); }

std::size_t maj(const Permutation& sigma) {
  PositionSet l = ligne(sigma);
  return std::accumulate(l.begin(), l.end(), std::size_t{0});
}

std::size_t inv(const Permutation& sigma) { return inv(sigma.as_word()); }

PositionSet ligne(const Permutation& sigma) {
  PositionSet out;
  for (std::size_t i = 1; i < sigma.size(); ++i)
    if (sigma(i) > sigma(i + 1)) out.push_back(i);
  return out;
}

PositionSet iligne(const Permutation& sigma) { return ligne(sigma.inverse()); }

HookFactorizationP hook_factorize(const Permutation& sigma) {
  Word w = sigma.as_word();
  HookFactorizationP h;
  std::vector<Word> reversed_hooks;
  std::size_t end = w.size();
  for (;;) {
    if (end == 0) break;
    std::size_t k = end - 1;
    while (k > 0 && w[k - 1] < w[k]) --k;
    if (k == 0) break;
    reversed_hooks.push_back(w.slice(k - 1, end - k + 1));
    end = k - 1;
  }
  h.prefix = w.slice(0, end);
  h.hooks.assign(reversed_hooks.rbegin(), reversed_hooks.rend());
  return h;
}

std::size_t lec(const Permutation& sigma) {
  std::size_t total = 0;
  for (const Word& hook : hook_factorize(sigma).hooks) total += inv(hook);
  return total;
}

std::size_t pix(const Permutation& sigma) { return hook_factorize(sigma).prefix.size(); }

PermStats perm_stats(const Permutation& sigma) {
  PermStats s;
  Permutation inverse = sigma.inverse();
  s.ligne = ligne(sigma);
  s.iligne = ligne(inverse);
  s.exc = exc(sigma);
  s.des = s.ligne.size();
  s.maj = std::accumulate(s.ligne.begin(), s.ligne.end(), std::size_t{0});
  s.fix = fix(sigma);
  s.inv = inv(sigma);
  s.ides = s.iligne.size();
  s.imaj = std::accumulate(s.iligne.begin(), s.iligne.end(), std::size_t{0});
  s.iexc = exc(inverse);
  HookFactorizationP h = hook_factorize(sigma);
  s.pix = h.prefix.size();
  for (const Word& hook : h.hooks) s.lec += inv(hook);
  return s;
}

ZStats z_stats(const Permutation& sigma) {
  std::vector<Letter> zeroed, kept;
  std::size_t shift = 0, fixed_seen = 0;
  for (std::size_t i = 1; i <= sigma.size(); ++i) {
    if (sigma(i) == i) {
      zeroed.push_back(0);
      ++fixed_seen;
      shift += i - fixed_seen;
    } else {
      zeroed.push_back(sigma(i));
      kept.push_back(sigma(i));
    }
  }
  Word z(std::move(zeroed));
  ZStats s;
  s.dez = des(z);
  s.maz = maj(z);
  s.maf = shift + maj(Word(std::move(kept)));
  return s;
}

Word lac(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  std::vector<Letter> out(n, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t k = i + 1;
    while (k <= n && sigma(k) < sigma(i)) ++k;
    out[i - 1] = static_cast<Letter>(k - i - 1);
  }
  return Word(std::move(out));
}

Word ilac(const Permutation& sigma) { return lac(sigma.inverse()); }

Permutation complement(const Permutation& sigma) {
  const auto n = static_cast<std::uint32_t>(sigma.size());
  std::vector<std::uint32_t> v;
  for (std::uint32_t x : sigma.values()) v.push_back(n + 1 - x);
  return Permutation(std::move(v));
}

Permutation reverse(const Permutation& sigma) {
  std::vector<std::uint32_t> v(sigma.values().rbegin(), sigma.values().rend());
  return Permutation(std::move(v));
}

Permutation first_fundamental(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  Permutation inverse = sigma.inverse();
  std::vector<bool> seen(n + 1, false);
  std::vector<std::uint32_t> out;
  std::vector<std::uint32_t> maxima;
  for (std::uint32_t start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::uint32_t top = start, x = start;
    do {
      seen[x] = true;
      top = std::max(top, x);
      x = sigma(x);
    } while (x != start);
    maxima.push_back(top);
  }
  std::sort(maxima.begin(), maxima.end());
  for (std::uint32_t top : maxima) {
    std::uint32_t x = top;
    do {
      out.push_back(x);
      x = inverse(x);
    } while (x != top);
  }
  return Permutation(std::move(out));
}

Permutation apply_symmetry(const Permutation& sigma, Symmetry which) {
  switch (which) {
    case Symmetry::inverse: return sigma.inverse();
    case Symmetry::complement: return complement(sigma);
    case Symmetry::reverse: return reverse(sigma);
    case Symmetry::first_fundamental: return first_fundamental(sigma);
  }
  throw InternalError("unknown symmetry");
}

Composition::Composition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k)
    if (parts_[k] == 0)
      throw PreconditionError("composition part " + std::to_string(k + 1) + " is zero");
}

Composition Composition::parse(std::string_view text) {
  Word w = parse_word_lenient(text);
  return Composition(std::vector<std::size_t>(w.begin(), w.end()));
}

std::size_t Composition::total() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

PositionSet composition_positions(const Composition& J) {
  PositionSet out;
  std::size_t sum = 0;
  for (auto it = J.parts().rbegin(); it != J.parts().rend(); ++it) {
    sum += *it;
    out.push_back(sum);
  }
  return out;
}

Word composition_word(const Composition& J) {
  std::vector<Letter> out;
  const std::size_t m = J.parts().size();
  for (std::size_t k = m; k >= 1; --k)
    out.insert(out.end(), J.parts()[k - 1], static_cast<Letter>(k));
  return Word(std::move(out));
}

std::vector<Permutation> composition_class_members(const Composition& J) {
  PositionSet allowed = composition_positions(J);
  std::vector<Permutation> out;
  for_each_permutation(J.total(), [&](const Permutation& sigma) {
    PositionSet il = iligne(sigma);
    if (std::includes(allowed.begin(), allowed.end(), il.begin(), il.end())) out.push_back(sigma);
  });
  return out;
}

}  // namespace fixmahon
