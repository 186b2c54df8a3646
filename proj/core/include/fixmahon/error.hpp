#pragma once

#include <stdexcept>
#include <string>

namespace fixmahon {

/// An argument violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text could not be parsed as a word, permutation, or polynomial.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed the configured element cap.
class CapExceededError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An internal consistency check failed; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fixmahon
