#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fixmahon/word.hpp"

namespace fixmahon {

/// A permutation of {1..n} in one-line notation. Validated on construction.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> values);
  static Permutation identity(std::size_t n);
  /// Reads a word with distinct letters 1..n as a permutation.
  static Permutation from_word(const Word& w);

  std::size_t size() const noexcept { return values_.size(); }
  /// sigma(i) for 1 <= i <= n.
  std::uint32_t operator()(std::size_t i) const { return values_[i - 1]; }
  std::span<const std::uint32_t> values() const noexcept { return values_; }

  Permutation inverse() const;
  Word as_word() const { return Word(values_.begin(), values_.end()); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<std::uint32_t> values_;
};

Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& sigma);

using PositionSet = std::vector<std::size_t>;
/// Sorted comma-separated integers; the empty set prints as the empty string.
std::string to_string(const PositionSet& set);

}  // namespace fixmahon
