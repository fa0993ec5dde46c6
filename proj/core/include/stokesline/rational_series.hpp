#ifndef STOKESLINE_RATIONAL_SERIES_HPP
#define STOKESLINE_RATIONAL_SERIES_HPP

#include <cstddef>
#include <vector>

#include "stokesline/rational.hpp"

namespace stokesline::exactpoly {

// Truncated formal power series with exact rational coefficients.
// coefficient(i) is the coefficient of w^i; terms beyond order() are
// truncated, not zero.
class RationalSeries {
public:
  explicit RationalSeries(std::size_t order) : c_(order + 1, Rational(0)) {}
  explicit RationalSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(Rational(0));
  }

  std::size_t order() const { return c_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rational>& coefficients() const { return c_; }

  RationalSeries truncated(std::size_t new_order) const;

private:
  std::vector<Rational> c_;
};

// All operations truncate the result at `order`.
RationalSeries add(const RationalSeries& a, const RationalSeries& b, std::size_t order);
RationalSeries sub(const RationalSeries& a, const RationalSeries& b, std::size_t order);
RationalSeries mul(const RationalSeries& a, const RationalSeries& b, std::size_t order);
RationalSeries scale(const RationalSeries& a, const Rational& s);
// 1/a, requires a[0] != 0
RationalSeries reciprocal(const RationalSeries& a, std::size_t order);
// log a, requires a[0] == 1
RationalSeries log_series(const RationalSeries& a, std::size_t order);
// exp a, requires a[0] == 0
RationalSeries exp_series(const RationalSeries& a, std::size_t order);
// d/dw, order drops by one
RationalSeries derivative(const RationalSeries& a);

// tau(w) = 1 + w + w^2/3 + ... solving w^2/2 = tau - log tau - 1 with the
// branch w ~ tau - 1, by Newton iteration on the formal series.
RationalSeries revert_saddle_map(std::size_t order);

// tau - log tau - 1 - w^2/2 with tau the given series (tau[0] must be 1);
// all coefficients through `order` must vanish for a correct reversion.
RationalSeries saddle_identity_defect(const RationalSeries& tau, std::size_t order);

} // namespace stokesline::exactpoly

#endif
