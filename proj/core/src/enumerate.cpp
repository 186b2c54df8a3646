#include "fixmahon/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "fixmahon/error.hpp"

namespace fixmahon {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t binomial_sat(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step
    std::uint64_t g = std::gcd(result, i);
    std::uint64_t num = mul_sat(result / g, (n - k + i) / (i / g));
    if (num == kSaturated) return kSaturated;
    result = num;
  }
  return result;
}

void check_cap(std::uint64_t expected, EnumerationCap cap, const char* what) {
  if (expected > cap.max_elements)
    throw CapExceededError(std::string(what) + " enumeration of " + std::to_string(expected) +
                           " elements exceeds the cap of " + std::to_string(cap.max_elements));
}

void niw_rec(std::size_t remaining, Letter bound, std::vector<Letter>& acc,
             const std::function<void(const Word&)>& visit) {
  if (remaining == 0) {
    visit(Word(acc));
    return;
  }
  for (Letter x = 0; x <= bound; ++x) {
    acc.push_back(x);
    niw_rec(remaining - 1, x, acc, visit);
    acc.pop_back();
  }
}

}  // namespace

std::uint64_t count_words(std::size_t n, Letter r) {
  std::uint64_t result = 1;
  for (std::size_t k = 0; k < n; ++k) result = mul_sat(result, std::uint64_t{r} + 1);
  return result;
}

std::uint64_t count_niw(std::size_t n, Letter r) { return binomial_sat(n + r, n); }

std::uint64_t count_dstar(std::size_t n, Letter r) { return count_words(n, r); }

std::uint64_t count_permutations(std::size_t n) {
  std::uint64_t result = 1;
  for (std::size_t k = 2; k <= n; ++k) result = mul_sat(result, k);
  return result;
}

void for_each_word(std::size_t n, Letter r, const std::function<void(const Word&)>& visit,
                   EnumerationCap cap) {
  check_cap(count_words(n, r), cap, "word");
  std::vector<Letter> letters(n, 0);
  for (;;) {
    visit(Word(letters));
    std::size_t k = n;
    while (k > 0 && letters[k - 1] == r) letters[--k] = 0;
    if (k == 0) return;
    ++letters[k - 1];
  }
}

void for_each_niw(std::size_t n, Letter r, const std::function<void(const Word&)>& visit,
                  EnumerationCap cap) {
  check_cap(count_niw(n, r), cap, "NIW");
  std::vector<Letter> acc;
  niw_rec(n, r, acc, visit);
}

void for_each_dpair(std::size_t n, Letter r, const std::function<void(const DPair&)>& visit,
                    EnumerationCap cap) {
  if (r == 0 || n < 2) return;
  check_cap(mul_sat(count_niw(n, r - 1), n - 1), cap, "D(r) pair");
  std::vector<Letter> acc;
  niw_rec(n, r - 1, acc, [&](const Word& w) {
    for (std::size_t i = 1; i < n; ++i) visit(DPair{w, i});
  });
}

void for_each_dstar(std::size_t n, Letter r, const std::function<void(const DStarSequence&)>& visit,
                    EnumerationCap cap) {
  check_cap(count_dstar(n, r), cap, "D* sequence");
  DStarSequence current;
  std::function<void(std::size_t)> extend = [&](std::size_t remaining) {
    if (remaining == 0) {
      visit(current);
      return;
    }
    for (std::size_t len = 2; len <= remaining; ++len) {
      for_each_dpair(len, r, [&](const DPair& p) {
        current.pairs.push_back(p);
        extend(remaining - len);
        current.pairs.pop_back();
      });
    }
  };
  for (std::size_t head_len = 0; head_len <= n; ++head_len) {
    for_each_niw(head_len, r, [&](const Word& head) {
      current.head = head;
      current.pairs.clear();
      extend(n - head_len);
    });
  }
}

void for_each_rearrangement(const Word& w, const std::function<void(const Word&)>& visit,
                            EnumerationCap cap) {
  std::vector<Letter> letters(w.begin(), w.end());
  std::sort(letters.begin(), letters.end());
  std::uint64_t produced = 0;
  do {
    if (++produced > cap.max_elements)
      throw CapExceededError("rearrangement enumeration exceeds the cap");
    visit(Word(letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
}

void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit,
                          EnumerationCap cap) {
  check_cap(count_permutations(n), cap, "permutation");
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 1u);
  do {
    visit(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

namespace {

template <class T, class F>
std::vector<T> collect(F&& producer) {
  std::vector<T> out;
  producer([&](const T& x) { out.push_back(x); });
  return out;
}

}  // namespace

std::vector<Word> all_words(std::size_t n, Letter r, EnumerationCap cap) {
  return collect<Word>([&](auto f) { for_each_word(n, r, f, cap); });
}
std::vector<Word> all_niw(std::size_t n, Letter r, EnumerationCap cap) {
  return collect<Word>([&](auto f) { for_each_niw(n, r, f, cap); });
}
std::vector<DPair> all_dpairs(std::size_t n, Letter r, EnumerationCap cap) {
  return collect<DPair>([&](auto f) { for_each_dpair(n, r, f, cap); });
}
std::vector<DStarSequence> all_dstar(std::size_t n, Letter r, EnumerationCap cap) {
  return collect<DStarSequence>([&](auto f) { for_each_dstar(n, r, f, cap); });
}
std::vector<Word> all_rearrangements(const Word& w, EnumerationCap cap) {
  return collect<Word>([&](auto f) { for_each_rearrangement(w, f, cap); });
}
std::vector<Permutation> all_permutations(std::size_t n, EnumerationCap cap) {
  return collect<Permutation>([&](auto f) { for_each_permutation(n, f, cap); });
}

}  // namespace fixmahon
