#include "fixmahon/series.hpp"

#include "fixmahon/error.hpp"

namespace fixmahon {

TruncatedSeries::TruncatedSeries(SeriesVar var, std::size_t order)
    : var_(var), order_(order), coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(SeriesVar var, std::size_t order, std::vector<Polynomial> coeffs)
    : var_(var), order_(order), coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::constant(SeriesVar var, std::size_t order, const Polynomial& value) {
  TruncatedSeries s(var, order);
  s.coeffs_[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::one_minus(SeriesVar var, std::size_t order, const Polynomial& a) {
  TruncatedSeries s(var, order);
  s.coeffs_[0] = Polynomial(1);
  if (order >= 1) s.coeffs_[1] = -a;
  return s;
}

void TruncatedSeries::require_compatible(const TruncatedSeries& other) const {
  if (var_ != other.var_ || order_ != other.order_)
    throw PreconditionError("series with different variables or orders");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_compatible(other);
  for (std::size_t k = 0; k <= order_; ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_compatible(other);
  for (std::size_t k = 0; k <= order_; ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_compatible(b);
  TruncatedSeries out(a.var_, a.order_);
  for (std::size_t i = 0; i <= a.order_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= a.order_; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const Polynomial& factor) const {
  TruncatedSeries out = *this;
  for (auto& c : out.coeffs_) c = c * factor;
  return out;
}

TruncatedSeries TruncatedSeries::divided_by(const TruncatedSeries& divisor) const {
  require_compatible(divisor);
  TruncatedSeries out(var_, order_);
  for (std::size_t n = 0; n <= order_; ++n) {
    Polynomial acc = coeffs_[n];
    for (std::size_t k = 1; k <= n; ++k)
      if (!divisor.coeffs_[k].is_zero() && !out.coeffs_[n - k].is_zero())
        acc -= divisor.coeffs_[k] * out.coeffs_[n - k];
    out.coeffs_[n] = acc.exact_divide(divisor.coeffs_[0]);
  }
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_[0] != Polynomial(1)) throw PreconditionError("series inverse needs constant term 1");
  return constant(var_, order_, Polynomial(1)).divided_by(*this);
}

}  // namespace fixmahon
