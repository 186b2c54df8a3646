#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fixmahon {

using Letter = std::uint32_t;

/// A finite word over the nonnegative integers. Positions are 0-based in the
/// API; statistics that report positions (descents, decreases, rmin) use
/// 1-based indices.
class Word {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  template <class It>
  Word(It first, It last) : letters_(first, last) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  std::span<const Letter> letters() const noexcept { return letters_; }

  /// Largest letter; the word must be nonempty.
  Letter max() const;
  /// Sum of the letters.
  std::uint64_t total() const noexcept;

  Word slice(std::size_t pos, std::size_t count) const;
  Word reversed() const;

  void push_back(Letter x) { letters_.push_back(x); }
  Word& operator+=(const Word& other);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  /// Plain lexicographic order (a proper prefix is smaller).
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

/// Parses whitespace-separated decimal letters; "" and "e" denote the empty word.
Word parse_word(std::string_view text);

/// Like parse_word, but a single all-digit token of length >= 2 with no
/// surrounding whitespace is read one digit per letter ("554112").
Word parse_word_lenient(std::string_view text);

/// Canonical form: letters joined by single spaces, "e" for the empty word.
std::string to_string(const Word& w);

/// Digit string when every letter is at most 9, canonical form otherwise.
std::string to_compact_string(const Word& w);

}  // namespace fixmahon
