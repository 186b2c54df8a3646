#include "fixmahon/permutation.hpp"

#include <numeric>

#include "fixmahon/error.hpp"

namespace fixmahon {

Permutation::Permutation(std::vector<std::uint32_t> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    std::uint32_t v = values_[i];
    if (v < 1 || v > values_.size() || seen[v])
      throw PreconditionError("not a permutation: value " + std::to_string(v) + " at position " +
                              std::to_string(i + 1));
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 1u);
  return Permutation(std::move(v));
}

Permutation Permutation::from_word(const Word& w) {
  return Permutation(std::vector<std::uint32_t>(w.begin(), w.end()));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) inv[values_[i] - 1] = static_cast<std::uint32_t>(i + 1);
  Permutation result;
  result.values_ = std::move(inv);
  return result;
}

Permutation parse_permutation(std::string_view text) {
  const Word w = parse_word(text);
  std::vector<bool> seen(w.size() + 1, false);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 1 || w[i] > w.size() || seen[w[i]])
      throw ParseError("bad token '" + std::to_string(w[i]) + "' at position " + std::to_string(i + 1) +
                       ": not a permutation of 1.." + std::to_string(w.size()));
    seen[w[i]] = true;
  }
  return Permutation::from_word(w);
}

std::string to_string(const Permutation& sigma) {
  if (sigma.size() == 0) return "e";
  return to_string(sigma.as_word());
}

std::string to_string(const PositionSet& set) {
  std::string out;
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(set[k]);
  }
  return out;
}

}  // namespace fixmahon
