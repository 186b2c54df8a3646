#pragma once

#include <cstddef>
#include <vector>

#include "fixmahon/polynomial.hpp"

namespace fixmahon {

enum class SeriesVar { u, t };

/// sum_{k <= order} coeffs[k] * x^k with polynomial coefficients; terms of
/// degree above the order are dropped by every operation.
class TruncatedSeries {
 public:
  TruncatedSeries(SeriesVar var, std::size_t order);
  TruncatedSeries(SeriesVar var, std::size_t order, std::vector<Polynomial> coeffs);
  static TruncatedSeries constant(SeriesVar var, std::size_t order, const Polynomial& value);
  /// 1 - a * x for a polynomial a.
  static TruncatedSeries one_minus(SeriesVar var, std::size_t order, const Polynomial& a);

  SeriesVar var() const noexcept { return var_; }
  std::size_t order() const noexcept { return order_; }
  const Polynomial& operator[](std::size_t k) const { return coeffs_[k]; }
  Polynomial& operator[](std::size_t k) { return coeffs_[k]; }
  const std::vector<Polynomial>& coefficients() const noexcept { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries& operator*=(const TruncatedSeries& other) { return *this = *this * other; }
  TruncatedSeries scaled(const Polynomial& factor) const;
  /// Quotient a / b; the constant term of b must divide exactly at every step.
  TruncatedSeries divided_by(const TruncatedSeries& divisor) const;
  /// Multiplicative inverse; the constant term must be 1.
  TruncatedSeries inverse() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void require_compatible(const TruncatedSeries& other) const;

  SeriesVar var_;
  std::size_t order_;
  std::vector<Polynomial> coeffs_;
};

}  // namespace fixmahon
