#include "fixmahon/word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "fixmahon/error.hpp"

namespace fixmahon {

Letter Word::max() const {
  if (letters_.empty()) throw PreconditionError("max of the empty word");
  return *std::max_element(letters_.begin(), letters_.end());
}

std::uint64_t Word::total() const noexcept {
  return std::accumulate(letters_.begin(), letters_.end(), std::uint64_t{0});
}

Word Word::slice(std::size_t pos, std::size_t count) const {
  if (pos > letters_.size() || count > letters_.size() - pos)
    throw PreconditionError("slice out of range");
  return Word(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
              letters_.begin() + static_cast<std::ptrdiff_t>(pos + count));
}

Word Word::reversed() const { return Word(letters_.rbegin(), letters_.rend()); }

Word& Word::operator+=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

Letter parse_letter(std::string_view token, std::size_t index) {
  Letter value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError("bad token '" + std::string(token) + "' at position " +
                     std::to_string(index + 1));
  return value;
}

}  // namespace

Word parse_word(std::string_view text) {
  auto tokens = tokenize(text);
  if (tokens.size() == 1 && tokens[0] == "e") return Word{};
  std::vector<Letter> letters;
  letters.reserve(tokens.size());
  for (std::size_t k = 0; k < tokens.size(); ++k) letters.push_back(parse_letter(tokens[k], k));
  return Word(std::move(letters));
}

Word parse_word_lenient(std::string_view text) {
  bool compact = text.size() >= 2 &&
                 std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (!compact) return parse_word(text);
  std::vector<Letter> letters;
  for (char c : text) letters.push_back(static_cast<Letter>(c - '0'));
  return Word(std::move(letters));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

std::string to_compact_string(const Word& w) {
  if (w.empty()) return "e";
  if (w.max() > 9) return to_string(w);
  std::string out;
  for (Letter x : w) out += static_cast<char>('0' + x);
  return out;
}

}  // namespace fixmahon
