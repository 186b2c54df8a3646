#include "fixmahon/polynomial.hpp"

#include <cctype>
#include <charconv>

#include "fixmahon/error.hpp"

namespace fixmahon {

char var_name(Var v) {
  static constexpr char names[kVarCount] = {'s', 't', 'q', 'Y'};
  return names[static_cast<std::size_t>(v)];
}

std::uint32_t Monomial::degree() const { return exp[0] + exp[1] + exp[2] + exp[3]; }

Monomial monomial(std::uint32_t s, std::uint32_t t, std::uint32_t q, std::uint32_t Y) {
  return Monomial{{s, t, q, Y}};
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  std::uint32_t da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exp < b.exp;
}

Polynomial::Polynomial(long long constant) : Polynomial(Integer(constant)) {}

Polynomial::Polynomial(Integer constant) {
  if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

Polynomial Polynomial::term(Integer coefficient, Monomial m) {
  Polynomial p;
  if (coefficient != 0) p.terms_.emplace(m, std::move(coefficient));
  return p;
}

Polynomial Polynomial::variable(Var v, std::uint32_t power) {
  Monomial m;
  m[v] = power;
  return term(1, m);
}

Integer Polynomial::coefficient_of(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::uint32_t Polynomial::degree_in(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

bool Polynomial::has_nonnegative_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (c < 0) return false;
  return true;
}

void Polynomial::add_term(const Integer& coefficient, const Monomial& m) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(c, m);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(-c, m);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

namespace {

Monomial times(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t k = 0; k < kVarCount; ++k) m.exp[k] = a.exp[k] + b.exp[k];
  return m;
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ca * cb, times(ma, mb));
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial Polynomial::pow(std::uint32_t k) const {
  Polynomial result(1), base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Polynomial Polynomial::substitute(Var v, const Integer& value) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest[v] = 0;
    out.add_term(c * boost::multiprecision::pow(value, m[v]), rest);
  }
  return out;
}

Polynomial Polynomial::substitute(Var v, const Polynomial& value) const {
  std::vector<Polynomial> powers{Polynomial(1)};
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    while (powers.size() <= m[v]) powers.push_back(powers.back() * value);
    Monomial rest = m;
    rest[v] = 0;
    out += Polynomial::term(c, rest) * powers[m[v]];
  }
  return out;
}

Polynomial Polynomial::reverse_in(Var v, std::uint32_t degree) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    if (m[v] > degree)
      throw PreconditionError(std::string("reversal in ") + var_name(v) + " would give a negative exponent");
    Monomial r = m;
    r[v] = degree - m[v];
    out.add_term(c, r);
  }
  return out;
}

Polynomial Polynomial::exact_divide(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw PreconditionError("division by the zero polynomial");
  const auto& [lead_m, lead_c] = *divisor.terms_.rbegin();
  if (divisor.terms_.size() == 1) {
    Polynomial quotient;
    for (const auto& [m, c] : terms_) {
      Monomial qm;
      for (std::size_t k = 0; k < kVarCount; ++k) {
        if (m.exp[k] < lead_m.exp[k]) throw PreconditionError("polynomial division is not exact");
        qm.exp[k] = m.exp[k] - lead_m.exp[k];
      }
      if (c % lead_c != 0) throw PreconditionError("polynomial division is not exact");
      quotient.terms_.emplace(qm, c / lead_c);
    }
    return quotient;
  }
  Polynomial remainder = *this, quotient;
  while (!remainder.is_zero()) {
    const auto& [m, c] = *remainder.terms_.rbegin();
    Monomial qm;
    for (std::size_t k = 0; k < kVarCount; ++k) {
      if (m.exp[k] < lead_m.exp[k]) throw PreconditionError("polynomial division is not exact");
      qm.exp[k] = m.exp[k] - lead_m.exp[k];
    }
    if (c % lead_c != 0) throw PreconditionError("polynomial division is not exact");
    Polynomial step = Polynomial::term(c / lead_c, qm);
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Integer magnitude = c < 0 ? Integer(-c) : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    std::string body;
    if (magnitude != 1 || m.degree() == 0) body = magnitude.str();
    for (std::size_t k = 0; k < kVarCount; ++k) {
      if (m.exp[k] == 0) continue;
      if (!body.empty()) body += '*';
      body += var_name(static_cast<Var>(k));
      if (m.exp[k] != 1) body += "^" + std::to_string(m.exp[k]);
    }
    out += body;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    Polynomial out;
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    for (;;) {
      out += parse_term(negative);
      skip_space();
      if (pos_ == text_.size()) break;
      char sign = peek();
      if (sign != '+' && sign != '-') fail("expected '+' or '-'");
      negative = sign == '-';
      ++pos_;
    }
    return out;
  }

 private:
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) {
    std::size_t end = pos_;
    while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end]))) ++end;
    throw ParseError("bad token '" + std::string(text_.substr(pos_, end - pos_)) + "' at offset " +
                     std::to_string(pos_) + ": " + why);
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Polynomial parse_term(bool negative) {
    skip_space();
    Integer coefficient = 1;
    Monomial m;
    bool any = false;
    for (;;) {
      skip_space();
      if (pos_ == text_.size()) fail("dangling operator");
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coefficient *= Integer(std::string(digits()));
      } else {
        int index = ch == 's' ? 0 : ch == 't' ? 1 : ch == 'q' ? 2 : ch == 'Y' ? 3 : -1;
        if (index < 0) fail("unknown variable");
        ++pos_;
        std::uint32_t power = 1;
        if (pos_ < text_.size() && peek() == '^') {
          ++pos_;
          std::string_view d = digits();
          if (d.empty()) fail("missing exponent");
          std::from_chars(d.data(), d.data() + d.size(), power);
        }
        m.exp[static_cast<std::size_t>(index)] += power;
      }
      any = true;
      skip_space();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    return Polynomial::term(negative ? Integer(-coefficient) : coefficient, m);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

std::string first_difference(const Polynomial& a, const Polynomial& b) {
  Polynomial diff = a - b;
  if (diff.is_zero()) return {};
  const auto& [m, c] = *diff.terms().begin();
  std::string mono = to_string(Polynomial::term(1, m));
  return "coefficient of " + mono + ": " + a.coefficient_of(m).str() + " vs " + b.coefficient_of(m).str();
}

}  // namespace fixmahon
