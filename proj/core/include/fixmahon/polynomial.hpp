#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fixmahon {

using Integer = boost::multiprecision::cpp_int;

enum class Var : std::size_t { s = 0, t = 1, q = 2, Y = 3 };
inline constexpr std::size_t kVarCount = 4;
char var_name(Var v);

/// Exponents of (s, t, q, Y).
struct Monomial {
  std::array<std::uint32_t, kVarCount> exp{};

  std::uint32_t degree() const;
  std::uint32_t& operator[](Var v) { return exp[static_cast<std::size_t>(v)]; }
  std::uint32_t operator[](Var v) const { return exp[static_cast<std::size_t>(v)]; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial monomial(std::uint32_t s, std::uint32_t t, std::uint32_t q, std::uint32_t Y);

/// Graded lexicographic order: total degree first, then (s, t, q, Y) lexicographically.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial in s, t, q, Y with exact integer coefficients. Zero
/// coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Integer, GrlexLess>;

  Polynomial() = default;
  Polynomial(long long constant);
  explicit Polynomial(Integer constant);
  static Polynomial term(Integer coefficient, Monomial m);
  static Polynomial variable(Var v, std::uint32_t power = 1);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  Integer coefficient_of(const Monomial& m) const;
  std::uint32_t degree_in(Var v) const;
  bool has_nonnegative_coefficients() const;

  void add_term(const Integer& coefficient, const Monomial& m);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(std::uint32_t k) const;
  /// Replaces v by an integer value.
  Polynomial substitute(Var v, const Integer& value) const;
  /// Replaces v by a polynomial.
  Polynomial substitute(Var v, const Polynomial& value) const;
  /// v^degree * p(1/v); throws when a term has v-degree above `degree`.
  Polynomial reverse_in(Var v, std::uint32_t degree) const;
  /// Exact quotient; throws when `divisor` does not divide this polynomial.
  Polynomial exact_divide(const Polynomial& divisor) const;

 private:
  TermMap terms_;
};

/// Canonical text: terms `coef*s^a*t^b*q^c*Y^d` in increasing graded-lex
/// order joined by " + " (negative coefficients as " - "); "0" for zero.
std::string to_string(const Polynomial& p);
Polynomial parse_polynomial(std::string_view text);

/// Describes the graded-lex smallest monomial whose coefficients differ; empty when equal.
std::string first_difference(const Polynomial& a, const Polynomial& b);

}  // namespace fixmahon
