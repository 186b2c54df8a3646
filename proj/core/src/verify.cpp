#include "fixmahon/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <tuple>

#include "fixmahon/enumerate.hpp"
#include "fixmahon/error.hpp"
#include "fixmahon/hook_bijections.hpp"
#include "fixmahon/lyndon_bijections.hpp"
#include "fixmahon/perm_bijections.hpp"
#include "fixmahon/perm_core.hpp"
#include "fixmahon/qseries.hpp"
#include "fixmahon/word_core.hpp"

namespace fixmahon {
namespace {

class Checker {
 public:
  explicit Checker(std::string suite) { report_.suite = std::move(suite); }

  template <class Describe>
  void expect(bool ok, std::string_view check, Describe&& describe) {
    ++report_.checked;
    if (!ok) fail(check, describe());
  }

  void fail(std::string_view check, std::string counterexample) {
    report_.passed = false;
    if (report_.failures.size() < kMaxRecordedFailures)
      report_.failures.push_back({std::string(check), std::move(counterexample)});
  }

  void audit(std::string name, std::uint64_t domain, std::uint64_t codomain) {
    ++report_.checked;
    if (domain != codomain)
      fail("audit " + name, std::to_string(domain) + " != " + std::to_string(codomain));
    report_.audits.push_back({std::move(name), domain, codomain});
  }

  // Runs `body`, turning an exception into a failure of `check`.
  template <class Body, class Describe>
  void guarded(std::string_view check, Describe&& describe, Body&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      ++report_.checked;
      fail(check, describe() + " threw: " + e.what());
    }
  }

  void count(std::uint64_t checks) { report_.checked += checks; }

  Report finish() { return std::move(report_); }

 private:
  Report report_;
};

struct Range {
  std::size_t n_max;
  std::size_t r_max;
  std::size_t alphabet_max;
};

std::string show(const Word& w) { return to_string(w); }
std::string show(const Permutation& s) { return to_string(s); }

std::string show(const Composition& J) {
  std::string out;
  for (std::size_t p : J.parts()) out += (out.empty() ? "" : " ") + std::to_string(p);
  return out;
}

std::string at(std::size_t n, std::size_t r) {
  return "n=" + std::to_string(n) + " r=" + std::to_string(r);
}

std::uint64_t total_of(const DStarSequence& d) {
  std::uint64_t t = d.head.total();
  for (const DPair& p : d.pairs) t += p.word.total();
  return t;
}

std::size_t index_sum(const DStarSequence& d) {
  std::size_t s = 0;
  for (const DPair& p : d.pairs) s += p.index;
  return s;
}

Word sorted_letters(const Word& w) {
  std::vector<Letter> v(w.begin(), w.end());
  std::sort(v.begin(), v.end());
  return Word(std::move(v));
}

bool is_rearrangement(const Word& a, const Word& b) { return sorted_letters(a) == sorted_letters(b); }

Word concat(const Word& head, const std::vector<Word>& parts) {
  Word out = head;
  for (const Word& p : parts) out += p;
  return out;
}

std::size_t dec_sum(const std::vector<Word>& words) {
  std::size_t s = 0;
  for (const Word& w : words) s += dec(w);
  return s;
}

bool letters_at_most(const Word& w, std::size_t r) {
  return std::all_of(w.begin(), w.end(), [&](Letter x) { return x <= r; });
}

Word filter(const Word& w, const std::function<bool(Letter)>& keep) {
  Word out;
  for (Letter x : w)
    if (keep(x)) out.push_back(x);
  return out;
}

// Tallies two multisets; the smallest key where they differ is the counterexample.
template <class Key>
class MultisetComparison {
 public:
  void left(const Key& k) { ++counts_[k].first; }
  void right(const Key& k) { ++counts_[k].second; }

  template <class Show>
  void report(Checker& ck, std::string_view check, Show&& show_key) const {
    for (const auto& [key, c] : counts_) {
      if (c.first != c.second) {
        ck.expect(false, check, [&] {
          return show_key(key) + " occurs " + std::to_string(c.first) + " vs " + std::to_string(c.second) +
                 " times";
        });
        return;
      }
    }
    ck.expect(true, check, [] { return std::string(); });
  }

 private:
  std::map<Key, std::pair<std::uint64_t, std::uint64_t>> counts_;
};

std::string show_set(const PositionSet& s) { return "{" + to_string(s) + "}"; }

// A_n is shared by several suites; compute each degree once per process.
const Polynomial& cached_an(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, Polynomial> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, extract_an(n)).first;
  return it->second;
}

Polynomial at_t_one(const Polynomial& p) { return p.substitute(Var::t, Integer(1)); }

void expect_poly(Checker& ck, std::string_view check, std::size_t n, const Polynomial& expected,
                 const Polynomial& actual) {
  ck.expect(expected == actual, check,
            [&] { return "n=" + std::to_string(n) + ": " + first_difference(expected, actual); });
}

std::vector<Composition> compositions(std::size_t n) {
  std::vector<Composition> out;
  std::vector<std::size_t> parts;
  std::function<void(std::size_t)> rec = [&](std::size_t left) {
    if (left == 0) {
      out.emplace_back(parts);
      return;
    }
    for (std::size_t p = 1; p <= left; ++p) {
      parts.push_back(p);
      rec(left - p);
      parts.pop_back();
    }
  };
  if (n > 0) rec(n);
  return out;
}

// ---------------------------------------------------------------------------

Report suite_word_core(const Range& range) {
  Checker ck("word-core");
  const Letter a = static_cast<Letter>(range.alphabet_max);
  for (std::size_t n = 0; n <= range.n_max; ++n) {
    for_each_word(n, a, [&](const Word& w) {
      auto who = [&] { return "w=" + show(w); };
      const auto factors = lyndon_factorize(w).factors;
      bool ordered = true, lyndon = true;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        lyndon = lyndon && is_lyndon(factors[i]);
        if (i + 1 < factors.size()) ordered = ordered && omega_compare(factors[i], factors[i + 1]) <= 0;
      }
      ck.expect(concat(Word{}, factors) == w, "lyndon factors concatenate to w", who);
      ck.expect(lyndon && ordered, "lyndon factors are omega-nondecreasing Lyndon words", who);

      if (n > 0) {
        std::size_t valid = 0;
        for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
          std::vector<Word> pieces;
          std::size_t start = 0;
          for (std::size_t i = 1; i <= n; ++i) {
            if (i == n || (mask >> (i - 1) & 1u)) {
              pieces.push_back(w.slice(start, i - start));
              start = i;
            }
          }
          bool ok = std::all_of(pieces.begin(), pieces.end(), [](const Word& p) { return is_lyndon(p); });
          for (std::size_t i = 0; ok && i + 1 < pieces.size(); ++i)
            ok = omega_compare(pieces[i], pieces[i + 1]) <= 0;
          valid += ok;
        }
        ck.expect(valid == 1, "lyndon factorization is unique", who);
      }

      const WordClass cls = classify(w);
      ck.expect((!cls.v_word || cls.u_word) && (!cls.u_word || cls.l_word) && (!cls.l_word || is_lyndon(w)),
                "V-word => U-word => L-word => Lyndon", who);

      const std::size_t one_letter = static_cast<std::size_t>(
          std::count_if(factors.begin(), factors.end(), [](const Word& f) { return f.size() == 1; }));
      ck.expect(single_stat(w).single == one_letter, "single counts one-letter factors", who);

      const HFactorization hf = h_factorize(w);
      bool hooks_ok = is_niw(hf.head);
      for (const Word& h : hf.hooks) hooks_ok = hooks_ok && is_h_word(h);
      ck.expect(hooks_ok && concat(hf.head, hf.hooks) == w, "H-factorization is a NIW head then H-words", who);
      ck.expect(wpix(w) == hf.head.size(), "wpix is the head length", who);
      ck.expect(decreases(w).positions.size() == dec(w), "dec counts the decrease positions", who);
    });
  }

  // omega order on short words: ties exactly on commuting pairs, transitive.
  std::vector<Word> small;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto ws = all_words(n, 2);
    small.insert(small.end(), ws.begin(), ws.end());
  }
  for (const Word& x : small) {
    for (const Word& y : small) {
      const auto xy = omega_compare(x, y);
      ck.expect((xy == 0) == (x + y == y + x), "omega ties iff the words commute",
                [&] { return "x=" + show(x) + " y=" + show(y); });
      ck.expect(omega_compare(y, x) == (0 <=> xy), "omega order is antisymmetric",
                [&] { return "x=" + show(x) + " y=" + show(y); });
      for (const Word& z : small) {
        if (xy <= 0 && omega_compare(y, z) <= 0)
          ck.expect(omega_compare(x, z) <= 0, "omega order is transitive",
                    [&] { return "x=" + show(x) + " y=" + show(y) + " z=" + show(z); });
      }
    }
  }

  for (std::size_t r = 0; r <= range.r_max; ++r)
    for (std::size_t n = 0; n <= range.n_max; ++n)
      ck.expect(cn_oracle(n, r, CnOracle::dec_words) == cn_oracle(n, r, CnOracle::wlec_words),
                "(dec, tot, single) and (wlec, tot, wpix) equidistributed", [&] { return at(n, r); });
  return ck.finish();
}

Report suite_perm_core(const Range& range) {
  Checker ck("perm-core");
  for (std::size_t n = 0; n <= range.n_max; ++n) {
    std::set<Permutation> images;
    for_each_permutation(n, [&](const Permutation& sigma) {
      auto who = [&] { return "sigma=" + show(sigma); };
      const PermStats st = perm_stats(sigma);
      const Permutation inv_sigma = sigma.inverse();
      ck.expect(st.ides == des(inv_sigma) && st.imaj == maj(inv_sigma) && st.iexc == exc(inv_sigma),
                "inverse statistics", who);
      ck.expect(st.des == st.ligne.size() &&
                    st.maj == std::accumulate(st.ligne.begin(), st.ligne.end(), std::size_t{0}),
                "Ligne determines des and maj", who);
      const Permutation hat = first_fundamental(sigma);
      images.insert(hat);
      ck.expect(exc(sigma) == des(hat) && fix(sigma) == single_stat(hat.as_word()).single,
                "(exc, fix) = (des, single) of the first fundamental image", who);
      const Permutation cr = complement(reverse(sigma));
      ck.expect(st.exc == exc(cr.inverse()) && st.fix == fix(cr) && st.des == des(cr) && st.ides == des(cr.inverse()),
                "(exc, fix, des, ides) = (iexc, fix, des, ides) after complement and reverse", who);
      ck.expect((st.pix == 0) == is_desarrangement_word(sigma.as_word()), "pix = 0 iff desarrangement", who);
      const HookFactorizationP hf = hook_factorize(sigma);
      bool hooks_ok = true;
      for (const Word& h : hf.hooks) hooks_ok = hooks_ok && is_hook_word(h);
      ck.expect(hooks_ok && concat(hf.prefix, hf.hooks) == sigma.as_word() && st.pix == hf.prefix.size(),
                "hook factorization", who);
    });
    ck.audit("first fundamental transformation on S_" + std::to_string(n), count_permutations(n),
             images.size());
  }
  return ck.finish();
}

Report suite_series_agreement(const Range& range) {
  Checker ck("series-agreement");
  for (std::size_t r = 0; r <= range.r_max; ++r) {
    const TruncatedSeries direct = expand_c(r, range.n_max, ExpansionMethod::direct);
    const TruncatedSeries geometric = expand_c(r, range.n_max, ExpansionMethod::geometric);
    for (std::size_t n = 0; n <= range.n_max; ++n) {
      auto who = [&] { return at(n, r) + ": " + first_difference(direct[n], geometric[n]); };
      ck.expect(direct[n] == geometric[n], "direct and geometric expansions agree", who);
      for (auto [oracle, label] : {std::pair{CnOracle::dec_words, "expansion matches the dec word sum"},
                                   std::pair{CnOracle::dstar_sequences, "expansion matches the D* sum"},
                                   std::pair{CnOracle::wlec_words, "expansion matches the wlec word sum"}}) {
        const Polynomial expected = cn_oracle(n, r, oracle);
        ck.expect(expected == direct[n], label,
                  [&] { return at(n, r) + ": " + first_difference(expected, direct[n]); });
      }
    }
  }
  return ck.finish();
}

Report suite_an_oracles(std::string name, const Range& range,
                        std::vector<std::tuple<AnOracle, bool, std::string>> oracles) {
  Checker ck(std::move(name));
  for (std::size_t n = 0; n <= range.n_max; ++n) {
    const Polynomial& an = cached_an(n);
    for (const auto& [oracle, t_to_one, label] : oracles)
      expect_poly(ck, label, n, t_to_one ? at_t_one(an) : an, an_oracle(n, oracle));
  }
  return ck.finish();
}

Report suite_theorem_1_3(const Range& range) {
  Checker ck("theorem-1.3");
  using Key = std::tuple<std::size_t, std::size_t, PositionSet>;
  for (std::size_t n = 0; n <= range.n_max; ++n) {
    MultisetComparison<Key> cmp;
    for_each_permutation(n, [&](const Permutation& sigma) {
      const PermStats st = perm_stats(sigma);
      cmp.left({st.iexc, st.fix, st.iligne});
      cmp.right({st.lec, st.pix, st.iligne});
    });
    cmp.report(ck, "(iexc, fix, Iligne) and (lec, pix, Iligne) equidistributed", [&](const Key& k) {
      return "n=" + std::to_string(n) + " value (" + std::to_string(std::get<0>(k)) + ", " +
             std::to_string(std::get<1>(k)) + ", " + show_set(std::get<2>(k)) + ")";
    });
  }
  return ck.finish();
}

Report suite_theorem_1_3_map(const Range& range) {
  Checker ck("theorem-1.3-map");
  for (std::size_t n = 1; n <= range.n_max; ++n) {
    for (const Composition& J : compositions(n)) {
      const std::vector<Permutation> members = composition_class_members(J);
      ck.audit("S^J vs R_J for J=" + show(J), members.size(),
               all_rearrangements(composition_word(J)).size());
      const PositionSet allowed = composition_positions(J);
      std::set<Permutation> images;
      for (const Permutation& sigma1 : members) {
        auto who = [&] { return "J=" + show(J) + " sigma1=" + show(sigma1); };
        ck.guarded("map defined on S^J", who, [&] {
          const Word w1 = composition_class_word(sigma1, J);
          ck.expect(psi_pix(w1, static_cast<Letter>(J.parts().size())).sigma == sigma1,
                    "class word standardizes back to sigma1", who);
          const Permutation sigma2 = lec_pix_to_iexc_fix(sigma1, J);
          images.insert(sigma2);
          const PositionSet il = iligne(sigma2);
          ck.expect(std::includes(allowed.begin(), allowed.end(), il.begin(), il.end()),
                    "Iligne sigma2 lies in L(J)", who);
          ck.expect(exc(sigma2.inverse()) == lec(sigma1) && fix(sigma2) == pix(sigma1),
                    "(iexc, fix) sigma2 = (lec, pix) sigma1", who);
        });
      }
      ck.audit("map image for J=" + show(J), members.size(), images.size());
    }
  }
  return ck.finish();
}

template <class Forward, class Inverse, class Stats>
Report suite_dstar_bijection(std::string name, const Range& range, Forward forward, Inverse inverse,
                             Stats stats) {
  Checker ck(std::move(name));
  for (std::size_t r = 0; r <= range.r_max; ++r) {
    for (std::size_t n = 0; n <= range.n_max; ++n) {
      const Letter rl = static_cast<Letter>(r);
      std::uint64_t domain = 0;
      std::set<Word> images;
      for_each_dstar(n, rl, [&](const DStarSequence& d) {
        ++domain;
        auto who = [&] { return at(n, r) + " d=" + to_string(d); };
        ck.guarded("forward map", who, [&] {
          const Word w = forward(d, rl);
          images.insert(w);
          ck.expect(w.size() == n && letters_at_most(w, r), "image lies in W_n(r)", who);
          const auto [index_stat, single_stat_value] = stats(w);
          ck.expect(index_stat == index_sum(d), "index sum is carried to the word statistic", who);
          ck.expect(w.total() == total_of(d) + index_sum(d), "tot w = tot d + index sum", who);
          ck.expect(single_stat_value == d.head.size(), "head length is carried to the word statistic", who);
          ck.expect(inverse(w, rl) == d, "inverse recovers d", who);
        });
      });
      ck.audit("D*_" + std::to_string(n) + "(" + std::to_string(r) + ") vs W_" + std::to_string(n) + "(" +
                   std::to_string(r) + ")",
               count_dstar(n, rl), count_words(n, rl));
      ck.audit("enumerated D* vs count " + at(n, r), domain, count_dstar(n, rl));
      ck.audit("distinct images " + at(n, r), images.size(), count_words(n, rl));
    }
  }
  return ck.finish();
}

Report suite_theorem_3_4(const Range& range) {
  Checker ck("theorem-3.4");
  for (std::size_t r = 0; r <= range.r_max; ++r) {
    for (std::size_t n = 0; n <= range.n_max; ++n) {
      std::set<std::pair<Word, std::vector<Word>>> seen;
      std::uint64_t words = 0;
      for_each_word(n, static_cast<Letter>(r), [&](const Word& w) {
        ++words;
        auto who = [&] { return at(n, r) + " w=" + show(w); };
        ck.guarded("decomposition", who, [&] {
          const VStarSequence s = v_decompose(w);
          seen.emplace(s.head, s.factors);
          ck.expect(is_niw(s.head), "w0 is monotone", who);
          ck.expect(std::all_of(s.factors.begin(), s.factors.end(), [](const Word& v) { return is_v_word(v); }),
                    "factors are V-words", who);
          ck.expect(is_rearrangement(concat(s.head, s.factors), w), "w0 v1 ... vk rearranges w", who);
          ck.expect(dec_sum(s.factors) == dec(w), "dec is additive over the V-words", who);
        });
      });
      ck.audit("distinct decompositions " + at(n, r), seen.size(), words);
    }
  }
  return ck.finish();
}

template <class Forward, class Back, class IsImage, class Stat>
Report suite_dpair_bijection(std::string name, std::string image_class, const Range& range, Forward forward,
                             Back back, IsImage is_image, Stat stat) {
  Checker ck(std::move(name));
  for (std::size_t r = 1; r <= range.r_max; ++r) {
    for (std::size_t n = 2; n <= range.n_max; ++n) {
      const Letter rl = static_cast<Letter>(r);
      std::uint64_t domain = 0;
      std::set<Word> images;
      for_each_dpair(n, rl, [&](const DPair& p) {
        ++domain;
        auto who = [&] { return at(n, r) + " w=" + show(p.word) + " i=" + std::to_string(p.index); };
        ck.guarded("forward map", who, [&] {
          const Word v = forward(p);
          images.insert(v);
          ck.expect(is_image(v) && v.size() == n && letters_at_most(v, r), "image is a " + image_class, who);
          ck.expect(stat(v) == p.index, "statistic of the image equals the index", who);
          ck.expect(v.total() == p.word.total() + p.index, "tot grows by the index", who);
          ck.expect(back(v) == p, "inverse recovers the pair", who);
        });
      });
      std::uint64_t codomain = 0;
      for_each_word(n, rl, [&](const Word& w) {
        if (!is_image(w)) return;
        ++codomain;
        ck.guarded("inverse map", [&] { return at(n, r) + " v=" + show(w); },
                   [&] { ck.expect(forward(back(w)) == w, "forward recovers the word", [&] { return show(w); }); });
      });
      ck.audit("D_" + std::to_string(n) + "(" + std::to_string(r) + ") vs " + image_class + "s", domain, codomain);
      ck.audit("distinct images " + at(n, r), images.size(), domain);
    }
  }
  return ck.finish();
}

// Each element of D* yields a V* sequence; `step` builds the next stage.
template <class Step>
void for_each_v_star(const Range& range, Step step) {
  for (std::size_t r = 0; r <= range.r_max; ++r)
    for (std::size_t n = 0; n <= range.n_max; ++n)
      for_each_dstar(n, static_cast<Letter>(r),
                     [&](const DStarSequence& d) { step(n, r, d_star_to_v_star(d)); });
}

std::vector<Word> words_up_to(std::size_t max_len, Letter alphabet, const std::function<bool(const Word&)>& keep) {
  std::vector<Word> out;
  for (std::size_t n = 1; n <= max_len; ++n)
    for_each_word(n, alphabet, [&](const Word& w) {
      if (keep(w)) out.push_back(w);
    });
  return out;
}

Letter rmin_letter(const Word& w) { return w[rmin(w) - 1]; }

Report suite_prop_3_2(const Range& range) {
  Checker ck("prop-3.2");
  for_each_v_star(range, [&](std::size_t n, std::size_t r, const VStarSequence& v) {
    auto who = [&] { return at(n, r) + " V*=" + to_string(v); };
    ck.guarded("V* to U*", who, [&] {
      const UStarSequence u = v_star_to_u_star(v);
      ck.expect(is_valid_u_star(u), "U* sequence is valid", who);
      ck.expect(is_rearrangement(concat(Word{}, u.factors), concat(Word{}, v.factors)),
                "U-words rearrange the V-words", who);
      ck.expect(dec_sum(u.factors) == dec_sum(v.factors), "dec sum preserved", who);
      ck.expect(u_star_to_v_star(u) == v, "inverse recovers V*", who);
    });
  });

  // Exhaustive legal (u, v) merges.
  const std::size_t len = range.n_max;
  const Letter a = static_cast<Letter>(range.alphabet_max);
  const auto us = words_up_to(len - 1, a, [](const Word& w) { return is_u_word(w); });
  const auto vs = words_up_to(len - 1, a, [](const Word& w) { return is_v_word(w); });
  std::set<Word> merged;
  std::uint64_t pairs = 0;
  for (const Word& u : us) {
    for (const Word& v : vs) {
      if (u.size() + v.size() > len || rmin_letter(u) < v.max()) continue;
      ++pairs;
      auto who = [&] { return "u=" + show(u) + " v=" + show(v); };
      ck.guarded("merge of U and V words", who, [&] {
        const Word x = merge_uv(u, v);
        merged.insert(x);
        ck.expect(is_u_word(x) && is_rearrangement(x, u + v), "merge is a U-word rearranging uv", who);
        ck.expect(dec(x) == dec(u) + dec(v), "merge adds dec", who);
        ck.expect(split_uv(x) == std::pair{u, v}, "split inverts merge", who);
      });
    }
  }
  ck.audit("distinct U-V merges", pairs, merged.size());
  return ck.finish();
}

Report suite_prop_3_3(const Range& range) {
  Checker ck("prop-3.3");
  for_each_v_star(range, [&](std::size_t n, std::size_t r, const VStarSequence& v) {
    const UStarSequence u = v_star_to_u_star(v);
    auto who = [&] { return at(n, r) + " U*=" + to_string(u); };
    ck.guarded("U* to L*", who, [&] {
      const LStarSequence l = u_star_to_l_star(u);
      ck.expect(is_valid_l_star(l), "L* sequence is valid", who);
      ck.expect(is_rearrangement(concat(Word{}, l.factors), concat(Word{}, u.factors)),
                "L-words rearrange the U-words", who);
      ck.expect(dec_sum(l.factors) == dec_sum(u.factors), "dec sum preserved", who);
      ck.expect(l_star_to_u_star(l) == u, "inverse recovers U*", who);
      const Word w = l_star_to_word(l);
      ck.expect(dec(w) == dec_sum(l.factors) && single_stat(w).single == l.head.size(),
                "assembled word carries dec and single", who);
      ck.expect(word_to_l_star(w) == l, "word splits back into L*", who);
    });
  });

  const std::size_t len = range.n_max;
  const Letter a = static_cast<Letter>(range.alphabet_max);
  const auto ls = words_up_to(len - 1, a, [](const Word& w) { return is_l_word(w); });
  const auto us = words_up_to(len - 1, a, [](const Word& w) { return is_u_word(w); });
  std::set<Word> merged;
  std::uint64_t pairs = 0;
  for (const Word& l : ls) {
    for (const Word& u : us) {
      if (l.size() + u.size() > len || rmin_letter(l) >= u.max() || l.max() <= u.max()) continue;
      ++pairs;
      auto who = [&] { return "l=" + show(l) + " u=" + show(u); };
      ck.guarded("merge of L and U words", who, [&] {
        const Word x = merge_lu(l, u);
        merged.insert(x);
        ck.expect(is_l_word(x) && is_rearrangement(x, l + u), "merge is an L-word rearranging lu", who);
        ck.expect(dec(x) == dec(l) + dec(u), "merge adds dec", who);
        ck.expect(split_lu(x) == std::pair{l, u}, "split inverts merge", who);
      });
    }
  }
  ck.audit("distinct L-U merges", pairs, merged.size());
  return ck.finish();
}

Report suite_theorem_6_1(const Range& range) {
  Checker ck("theorem-6.1");
  const Letter a = static_cast<Letter>(range.r_max);
  for (std::size_t n = 0; n <= range.n_max; ++n) {
    std::set<Word> images;
    for_each_word(n, a, [&](const Word& w) {
      auto who = [&] { return "w=" + show(w); };
      ck.guarded("F", who, [&] {
        const Word f = transform_f(w);
        images.insert(f);
        ck.expect(is_rearrangement(f, w), "F(w) rearranges w", who);
        ck.expect(dec(w) == wlec(f) && single_stat(w).single == wpix(f), "(dec, single) w = (wlec, wpix) F(w)",
                  who);
        ck.expect(transform_f_inverse(f) == w, "inverse of F recovers w", who);
        if (!w.empty())
          for (Letter r = w.max(); r <= a; ++r)
            ck.expect(transform_f(w, r) == f, "F does not depend on the alphabet bound", who);
      });
    });
    ck.audit("F on W_" + std::to_string(n) + "(" + std::to_string(a) + ")", count_words(n, a), images.size());
  }
  return ck.finish();
}

Report suite_second_fundamental(const Range& range) {
  Checker ck("second-fundamental");
  const Letter a = static_cast<Letter>(range.r_max);
  for (std::size_t n = 0; n <= range.n_max; ++n) {
    std::set<Word> images;
    for_each_word(n, a, [&](const Word& w) {
      auto who = [&] { return "w=" + show(w); };
      const Word phi = phi_second(w);
      images.insert(phi);
      ck.expect(maj(w) == inv(phi), "maj w = inv of the image", who);
      ck.expect(is_rearrangement(w, phi), "image rearranges w", who);
      ck.expect(phi_second_inverse(phi) == w, "inverse recovers w", who);
    });
    ck.audit("second fundamental transformation on W_" + std::to_string(n) + "(" + std::to_string(a) + ")",
             count_words(n, a), images.size());
  }
  for (std::size_t n = 0; n + 1 <= range.n_max; ++n) {
    for_each_word(n, a, [&](const Word& v) {
      for (Letter x = 0; x <= a; ++x) {
        auto who = [&] { return "v=" + show(v) + " x=" + std::to_string(x); };
        const Word g = gamma_x(v, x);
        ck.expect(is_rearrangement(g, v), "gamma rearranges v", who);
        ck.expect(filter(g, [x](Letter y) { return y < x; }) == filter(v, [x](Letter y) { return y < x; }),
                  "gamma keeps the subword of smaller letters", who);
        ck.expect(filter(g, [x](Letter y) { return y > x; }) == filter(v, [x](Letter y) { return y > x; }),
                  "gamma keeps the subword of larger letters", who);
      }
    });
  }
  using Key = std::pair<PositionSet, std::size_t>;
  for (std::size_t n = 0; n <= range.n_max; ++n) {
    MultisetComparison<Key> cmp;
    for_each_permutation(n, [&](const Permutation& sigma) {
      const Permutation image = Permutation::from_word(phi_second(sigma.as_word()));
      ck.expect(iligne(image) == iligne(sigma), "Iligne preserved on permutations",
                [&] { return "sigma=" + show(sigma); });
      cmp.left({iligne(sigma), maj(sigma)});
      cmp.right({iligne(sigma), inv(sigma)});
    });
    cmp.report(ck, "(Iligne, maj) and (Iligne, inv) equidistributed", [&](const Key& k) {
      return "n=" + std::to_string(n) + " value (" + show_set(k.first) + ", " + std::to_string(k.second) + ")";
    });
  }
  return ck.finish();
}

Report suite_theorem_7_2(const Range& range) {
  Checker ck("theorem-7.2");
  for (std::size_t n = 0; n <= range.n_max; ++n) {
    MultisetComparison<std::pair<Word, std::size_t>> lac_cmp;
    MultisetComparison<std::tuple<std::size_t, std::size_t, std::size_t>> lec_cmp;
    for_each_permutation(n, [&](const Permutation& sigma) {
      const Permutation image = Permutation::from_word(phi_second(sigma.as_word()));
      ck.expect(ilac(image) == ilac(sigma), "ILAC preserved by the second fundamental transformation",
                [&] { return "sigma=" + show(sigma); });
      const PermStats st = perm_stats(sigma);
      lac_cmp.left({lac(sigma), st.imaj});
      lac_cmp.right({lac(sigma), st.inv});
      lec_cmp.left({st.lec, st.imaj, st.pix});
      lec_cmp.right({st.lec, st.inv, st.pix});
    });
    lac_cmp.report(ck, "(LAC, imaj) and (LAC, inv) equidistributed", [&](const auto& k) {
      return "n=" + std::to_string(n) + " value (" + show(k.first) + ", " + std::to_string(k.second) + ")";
    });
    lec_cmp.report(ck, "(lec, imaj, pix) and (lec, inv, pix) equidistributed", [&](const auto& k) {
      return "n=" + std::to_string(n) + " value (" + std::to_string(std::get<0>(k)) + ", " +
             std::to_string(std::get<1>(k)) + ", " + std::to_string(std::get<2>(k)) + ")";
    });
  }
  return ck.finish();
}

Report suite_prop_7_1(const Range& range) {
  Checker ck("prop-7.1");
  for (std::size_t n = 0; n <= range.n_max; ++n) {
    for_each_permutation(n, [&](const Permutation& sigma) {
      const Word l = lac(sigma);
      PositionSet positive;
      for (std::size_t i = 0; i < l.size(); ++i)
        if (l[i] >= 1) positive.push_back(i + 1);
      ck.expect(positive == ligne(sigma), "i in Ligne iff LAC_i >= 1", [&] { return "sigma=" + show(sigma); });
    });
  }
  return ck.finish();
}

Report suite_prop_7_3(const Range& range) {
  Checker ck("prop-7.3");
  for (std::size_t n = 0; n <= range.n_max; ++n) {
    std::map<Word, Permutation> first_with_lac;
    for_each_permutation(n, [&](const Permutation& sigma) {
      const auto [it, inserted] = first_with_lac.emplace(lac(sigma), sigma);
      if (inserted) return;
      const Permutation& tau = it->second;
      auto who = [&] { return "sigma=" + show(tau) + " tau=" + show(sigma); };
      ck.expect(ligne(sigma) == ligne(tau), "equal LAC gives equal Ligne", who);
      ck.expect(des(sigma) == des(tau) && maj(sigma) == maj(tau), "equal LAC gives equal (des, maj)", who);
      ck.expect(pix(sigma) == pix(tau), "equal LAC gives equal pix", who);
      ck.expect(lec(sigma) == lec(tau), "equal LAC gives equal lec", who);
    });
  }
  return ck.finish();
}

struct PsiSpec {
  std::string name;
  bool fix_version;
};

Report suite_psi(const PsiSpec& spec, const Range& range) {
  Checker ck(spec.name);
  for (std::size_t r = 0; r <= range.r_max; ++r) {
    const Letter rl = static_cast<Letter>(r);
    for (std::size_t n = 0; n <= range.n_max; ++n) {
      std::set<StatPair> images;
      for_each_word(n, rl, [&](const Word& w) {
        auto who = [&] { return at(n, r) + " w=" + show(w); };
        ck.guarded("forward map", who, [&] {
          const StatPair p = spec.fix_version ? psi_fix(w, rl) : psi_pix(w, rl);
          images.insert(p);
          const PermStats st = perm_stats(p.sigma);
          const std::size_t descents = spec.fix_version ? st.des : st.ides;
          ck.expect(descents <= r && is_niw(p.c) && p.c.size() == n && letters_at_most(p.c, r - descents),
                    "c is monotone with letters at most r minus the descent count", who);
          if (spec.fix_version) {
            ck.expect(dec(w) == st.exc && single_stat(w).single == st.fix && w.total() == st.maj + p.c.total(),
                      "(dec, tot, single) w = (exc, maj + tot c, fix)", who);
            const PsiFixTrace trace = psi_fix_trace(w, rl);
            bool monotone = true;
            for (std::size_t i = 1; i < n; ++i)
              if (p.sigma(i) > p.sigma(i + 1)) monotone = monotone && trace.sorted_letters[i - 1] > trace.sorted_letters[i];
            ck.expect(monotone, "descents of sigma are strict drops of the sorted letters", who);
            ck.expect(trace.sorted_letters == sorted_letters(w).reversed(), "sorted letters rearrange w", who);
            ck.expect(psi_fix_inverse(p, rl) == w, "inverse recovers w", who);
          } else {
            ck.expect(wlec(w) == st.lec && wpix(w) == st.pix && w.total() == st.imaj + p.c.total(),
                      "(wlec, tot, wpix) w = (lec, imaj + tot c, pix)", who);
            const HFactorization hf = h_factorize(w);
            const HookFactorizationP hk = hook_factorize(p.sigma);
            bool same_type = hf.head.size() == hk.prefix.size() && hf.hooks.size() == hk.hooks.size();
            for (std::size_t i = 0; same_type && i < hf.hooks.size(); ++i)
              same_type = hf.hooks[i].size() == hk.hooks[i].size();
            ck.expect(same_type, "w and sigma share the factorization type", who);
            ck.expect(psi_pix_inverse(p, rl) == w, "inverse recovers w", who);
          }
        });
      });
      ck.audit("distinct images " + at(n, r), count_words(n, rl), images.size());

      if (n > 5) continue;
      // The image set has the size of S_n(r, des) and the word sums reduce to B-sums.
      std::uint64_t target = 0;
      Polynomial reduced;
      for_each_permutation(n, [&](const Permutation& sigma) {
        const PermStats st = perm_stats(sigma);
        const std::size_t descents = spec.fix_version ? st.des : st.ides;
        if (descents > r) return;
        const std::size_t top = n + r - descents;
        target += count_niw(n, static_cast<Letter>(r - descents));
        const Monomial m = spec.fix_version
                               ? monomial(static_cast<std::uint32_t>(st.exc), 0, static_cast<std::uint32_t>(st.maj),
                                          static_cast<std::uint32_t>(st.fix))
                               : monomial(static_cast<std::uint32_t>(st.lec), 0, static_cast<std::uint32_t>(st.imaj),
                                          static_cast<std::uint32_t>(st.pix));
        reduced += Polynomial::term(1, m) * gauss_binomial(top, n);
      });
      ck.audit("W_n(r) vs pairs (sigma, c) " + at(n, r), count_words(n, rl), target);
      const Polynomial words = cn_oracle(n, r, spec.fix_version ? CnOracle::dec_words : CnOracle::wlec_words);
      ck.expect(words == reduced, "word sum equals the permutation sum with Gaussian weights",
                [&] { return at(n, r) + ": " + first_difference(words, reduced); });
    }
  }
  return ck.finish();
}

Report suite_specializations(const Range& range) {
  Checker ck("specializations");
  SpecializationOptions options;
  options.n_max = range.n_max;
  std::vector<Polynomial> table;
  for (std::size_t n = 0; n <= range.n_max; ++n) table.push_back(cached_an(n));
  for (Specialization which : all_specializations()) {
    const SpecializationReport r = specialization_check(which, options, table);
    if (r.checked > 1) ck.count(r.checked - 1);
    ck.expect(r.passed, r.name, [&] { return r.first_failure; });
  }
  return ck.finish();
}

Report suite_golden(const Range&) {
  Checker ck("golden");
  for (const std::string& name : table_names()) {
    ck.guarded("table " + name, [&] { return name; }, [&] {
      const TableReproduction t = reproduce_table(name);
      ck.expect(t.matches(), "table " + name, [&] {
        const auto end = t.diff.find('\n');
        return "first differing line " + t.diff.substr(0, end);
      });
    });
  }
  return ck.finish();
}

struct SuiteEntry {
  std::string name;
  Range defaults;
  std::function<Report(const Range&)> run;
};

const std::vector<SuiteEntry>& registry() {
  using T = std::tuple<AnOracle, bool, std::string>;
  static const std::vector<SuiteEntry> entries = {
      {"word-core", {6, 3, 4}, suite_word_core},
      {"perm-core", {7, 3, 4}, suite_perm_core},
      {"series-agreement", {5, 3, 4}, suite_series_agreement},
      {"theorem-1.1", {7, 3, 4},
       [](const Range& r) {
         return suite_an_oracles("theorem-1.1", r, {T{AnOracle::exc_des_maj_fix, false, "A_n = sum s^exc t^des q^maj Y^fix"}});
       }},
      {"theorem-1.2", {7, 3, 4},
       [](const Range& r) {
         return suite_an_oracles("theorem-1.2", r,
                                 {T{AnOracle::lec_ides_imaj_pix, false, "A_n = sum s^lec t^ides q^imaj Y^pix"}});
       }},
      {"theorem-1.3", {7, 3, 4}, suite_theorem_1_3},
      {"theorem-1.3-map", {6, 3, 4}, suite_theorem_1_3_map},
      {"theorem-1.4", {7, 3, 4},
       [](const Range& r) {
         return suite_an_oracles("theorem-1.4", r, {T{AnOracle::lec_inv_pix, true, "A_n(t=1) = sum s^lec q^inv Y^pix"}});
       }},
      {"interpretations", {7, 3, 4},
       [](const Range& r) {
         return suite_an_oracles("interpretations", r,
                                 {T{AnOracle::exc_dez_maz_fix, false, "A_n = sum s^exc t^dez q^maz Y^fix"},
                                  T{AnOracle::exc_maf_fix, true, "A_n(t=1) = sum s^exc q^maf Y^fix"}});
       }},
      {"theorem-2.1", {6, 3, 4},
       [](const Range& r) {
         return suite_dstar_bijection(
             "theorem-2.1", r, [](const DStarSequence& d, Letter rl) { return phi_fix(d, rl); },
             [](const Word& w, Letter rl) { return phi_fix_inverse(w, rl); },
             [](const Word& w) { return std::pair{dec(w), single_stat(w).single}; });
       }},
      {"theorem-2.3", {6, 3, 4},
       [](const Range& r) {
         return suite_dstar_bijection(
             "theorem-2.3", r, [](const DStarSequence& d, Letter rl) { return phi_pix(d, rl); },
             [](const Word& w, Letter rl) { return phi_pix_inverse(w, rl); },
             [](const Word& w) { return std::pair{wlec(w), wpix(w)}; });
       }},
      {"theorem-3.4", {6, 3, 4}, suite_theorem_3_4},
      {"prop-3.1", {6, 3, 4},
       [](const Range& r) {
         return suite_dpair_bijection(
             "prop-3.1", "V-word", r, [](const DPair& p) { return d_pair_to_v(p); },
             [](const Word& v) { return v_to_d_pair(v); }, [](const Word& v) { return is_v_word(v); },
             [](const Word& v) { return dec(v); });
       }},
      {"prop-3.2", {6, 3, 4}, suite_prop_3_2},
      {"prop-3.3", {6, 3, 4}, suite_prop_3_3},
      {"prop-4.1", {6, 3, 4},
       [](const Range& r) {
         return suite_dpair_bijection(
             "prop-4.1", "H-word", r, [](const DPair& p) { return d_pair_to_h(p); },
             [](const Word& h) { return h_to_d_pair(h); }, [](const Word& h) { return is_h_word(h); },
             [](const Word& h) { return rinv(h); });
       }},
      {"psi-fix", {6, 3, 4}, [](const Range& r) { return suite_psi({"psi-fix", true}, r); }},
      {"psi-pix", {6, 3, 4}, [](const Range& r) { return suite_psi({"psi-pix", false}, r); }},
      {"theorem-6.1", {6, 3, 4}, suite_theorem_6_1},
      {"second-fundamental", {6, 3, 4}, suite_second_fundamental},
      {"prop-7.1", {6, 3, 4}, suite_prop_7_1},
      {"theorem-7.2", {6, 3, 4}, suite_theorem_7_2},
      {"prop-7.3", {6, 3, 4}, suite_prop_7_3},
      {"specializations", {7, 3, 4}, suite_specializations},
      {"golden", {0, 0, 0}, suite_golden},
  };
  return entries;
}

Range resolve(const SuiteEntry& entry, const Caps& caps) {
  Range range = entry.defaults;
  if (caps.n_max) range.n_max = *caps.n_max;
  if (caps.r_max) range.r_max = *caps.r_max;
  if (caps.alphabet_max) range.alphabet_max = *caps.alphabet_max;
  return range;
}

void check_caps(const Caps& caps) {
  if (caps.n_max && *caps.n_max > kMaxWordLength)
    throw PreconditionError("n-max " + std::to_string(*caps.n_max) + " exceeds the limit " +
                            std::to_string(kMaxWordLength));
  if (caps.r_max && *caps.r_max > kMaxLetter)
    throw PreconditionError("r-max " + std::to_string(*caps.r_max) + " exceeds the limit " +
                            std::to_string(kMaxLetter));
  if (caps.alphabet_max && *caps.alphabet_max > kMaxLetter)
    throw PreconditionError("alphabet-max " + std::to_string(*caps.alphabet_max) + " exceeds the limit " +
                            std::to_string(kMaxLetter));
}

const SuiteEntry& find_suite(std::string_view name) {
  for (const SuiteEntry& e : registry())
    if (e.name == name) return e;
  throw PreconditionError("unknown suite: " + std::string(name));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const SuiteEntry& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

std::vector<Report> run_all_suites(const Caps& caps) {
  check_caps(caps);
  std::vector<std::future<Report>> pending;
  for (const SuiteEntry& e : registry())
    pending.push_back(std::async(std::launch::async, [&e, &caps] { return e.run(resolve(e, caps)); }));
  std::vector<Report> reports;
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

Report run_suite(std::string_view name, const Caps& caps) {
  if (name == "all") return merge_reports("all", run_all_suites(caps));
  const SuiteEntry& entry = find_suite(name);
  check_caps(caps);
  return entry.run(resolve(entry, caps));
}

Report check_words(std::string suite, std::string check, std::size_t n_max, std::size_t r,
                   const std::function<bool(const Word&)>& property) {
  if (n_max > kMaxWordLength || r > kMaxLetter)
    throw PreconditionError("word property range exceeds the enumeration ceilings");
  Checker ck(std::move(suite));
  for (std::size_t n = 0; n <= n_max; ++n)
    for_each_word(n, static_cast<Letter>(r), [&](const Word& w) {
      ck.expect(property(w), check, [&] { return at(n, r) + " w=" + show(w); });
    });
  return ck.finish();
}

}  // namespace fixmahon
