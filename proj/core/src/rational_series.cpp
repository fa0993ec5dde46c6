#include "stokesline/rational_series.hpp"

#include <algorithm>

#include "stokesline/errors.hpp"

namespace stokesline::exactpoly {

RationalSeries RationalSeries::truncated(std::size_t new_order) const {
  RationalSeries r(new_order);
  std::size_t n = std::min(new_order, order());
  for (std::size_t i = 0; i <= n; ++i) r[i] = c_[i];
  return r;
}

RationalSeries add(const RationalSeries& a, const RationalSeries& b, std::size_t order) {
  RationalSeries r(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (i <= a.order()) r[i] += a[i];
    if (i <= b.order()) r[i] += b[i];
  }
  return r;
}

RationalSeries sub(const RationalSeries& a, const RationalSeries& b, std::size_t order) {
  RationalSeries r(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (i <= a.order()) r[i] += a[i];
    if (i <= b.order()) r[i] -= b[i];
  }
  return r;
}

RationalSeries mul(const RationalSeries& a, const RationalSeries& b, std::size_t order) {
  RationalSeries r(order);
  std::size_t na = std::min(order, a.order());
  for (std::size_t i = 0; i <= na; ++i) {
    if (a[i] == 0) continue;
    std::size_t nb = std::min(order - i, b.order());
    for (std::size_t j = 0; j <= nb; ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

RationalSeries scale(const RationalSeries& a, const Rational& s) {
  RationalSeries r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) r[i] = a[i] * s;
  return r;
}

RationalSeries reciprocal(const RationalSeries& a, std::size_t order) {
  if (a[0] == 0) throw UsageError("reciprocal: constant term is zero");
  RationalSeries r(order);
  Rational inv0 = 1 / a[0];
  r[0] = inv0;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational s(0);
    std::size_t kmax = std::min(n, a.order());
    for (std::size_t k = 1; k <= kmax; ++k) s += a[k] * r[n - k];
    r[n] = -inv0 * s;
  }
  return r;
}

RationalSeries log_series(const RationalSeries& a, std::size_t order) {
  if (a[0] != 1) throw UsageError("log_series: constant term must be 1");
  // n L_n = n A_n - sum_{k=1}^{n-1} k L_k A_{n-k}
  RationalSeries l(order);
  for (std::size_t n = 1; n <= order; ++n) {
    Rational s(0);
    if (n <= a.order()) s = Rational(static_cast<long>(n)) * a[n];
    for (std::size_t k = 1; k < n; ++k) {
      if (n - k <= a.order()) s -= Rational(static_cast<long>(k)) * l[k] * a[n - k];
    }
    l[n] = s / Rational(static_cast<long>(n));
  }
  return l;
}

RationalSeries exp_series(const RationalSeries& a, std::size_t order) {
  if (a[0] != 0) throw UsageError("exp_series: constant term must be 0");
  // n E_n = sum_{k=1}^{n} k A_k E_{n-k}
  RationalSeries e(order);
  e[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational s(0);
    std::size_t kmax = std::min(n, a.order());
    for (std::size_t k = 1; k <= kmax; ++k) {
      s += Rational(static_cast<long>(k)) * a[k] * e[n - k];
    }
    e[n] = s / Rational(static_cast<long>(n));
  }
  return e;
}

RationalSeries derivative(const RationalSeries& a) {
  if (a.order() == 0) return RationalSeries(std::size_t{0});
  RationalSeries d(a.order() - 1);
  for (std::size_t i = 1; i <= a.order(); ++i) {
    d[i - 1] = Rational(static_cast<long>(i)) * a[i];
  }
  return d;
}

namespace {

// log(1 + s) for a series s with zero constant term.
RationalSeries log1p_series(const RationalSeries& s, std::size_t order) {
  RationalSeries one_plus(order);
  one_plus[0] = 1;
  for (std::size_t i = 1; i <= std::min(order, s.order()); ++i) one_plus[i] = s[i];
  return log_series(one_plus, order);
}

// a / s where s has valuation exactly 1 and a has valuation >= 1.
RationalSeries divide_by_valuation_one(const RationalSeries& a, const RationalSeries& s,
                                       std::size_t order) {
  if (s[0] != 0 || s[1] == 0) throw UsageError("divide: divisor must have valuation 1");
  if (a[0] != 0) throw UsageError("divide: numerator must have valuation >= 1");
  RationalSeries a_shift(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (i + 1 <= a.order()) a_shift[i] = a[i + 1];
  }
  RationalSeries s_shift(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (i + 1 <= s.order()) s_shift[i] = s[i + 1];
  }
  return mul(a_shift, reciprocal(s_shift, order), order);
}

} // namespace

RationalSeries revert_saddle_map(std::size_t order) {
  if (order < 1) throw UsageError("revert_saddle_map: order must be >= 1");
  // Solve phi(s) = s - log(1+s) - w^2/2 = 0 for s(w) with s = w + O(w^2),
  // then tau = 1 + s.  Newton step: s <- s - phi(s) (1+s)/s.  The correct
  // order roughly doubles per step; iterating log2(order)+2 times at full
  // truncation order is cheap and simple.  The division by the
  // valuation-1 series s drops one order, so the top coefficient is only
  // pinned by the defect two orders higher: work at order+2 internally.
  std::size_t n = order + 2;
  RationalSeries s(n);
  s[1] = 1;
  std::size_t steps = 2;
  for (std::size_t m = 1; m < n; m *= 2) ++steps;
  for (std::size_t it = 0; it < steps; ++it) {
    RationalSeries phi = sub(s, log1p_series(s, n), n);
    phi[2] -= Rational(1, 2); // - w^2/2
    RationalSeries one_plus_s(n);
    one_plus_s[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) one_plus_s[i] = s[i];
    RationalSeries num = mul(phi, one_plus_s, n);
    RationalSeries corr = divide_by_valuation_one(num, s, n);
    s = sub(s, corr, n);
  }
  RationalSeries tau(order);
  tau[0] = 1;
  for (std::size_t i = 1; i <= order; ++i) tau[i] = s[i];
  return tau;
}

RationalSeries saddle_identity_defect(const RationalSeries& tau, std::size_t order) {
  if (tau[0] != 1) throw UsageError("saddle_identity_defect: tau must start at 1");
  RationalSeries t = tau.truncated(order);
  RationalSeries defect = sub(t, log_series(t, order), order);
  defect[0] -= 1;
  if (order >= 2) defect[2] -= Rational(1, 2);
  return defect;
}

} // namespace stokesline::exactpoly
