#include "stokesline/gamma_poly.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "stokesline/errors.hpp"

namespace stokesline::exactpoly {

GammaPoly::GammaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
  if (c_.empty()) c_.push_back(Rational(0));
}

Rational GammaPoly::eval(const Rational& gamma) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * gamma + c_[i];
  }
  return acc;
}

GammaPoly add(const GammaPoly& a, const GammaPoly& b) {
  std::vector<Rational> c(std::max(a.degree(), b.degree()) + 1, Rational(0));
  for (std::size_t i = 0; i <= a.degree(); ++i) c[i] += a.coefficient(i);
  for (std::size_t i = 0; i <= b.degree(); ++i) c[i] += b.coefficient(i);
  return GammaPoly(std::move(c));
}

GammaPoly sub(const GammaPoly& a, const GammaPoly& b) {
  std::vector<Rational> c(std::max(a.degree(), b.degree()) + 1, Rational(0));
  for (std::size_t i = 0; i <= a.degree(); ++i) c[i] += a.coefficient(i);
  for (std::size_t i = 0; i <= b.degree(); ++i) c[i] -= b.coefficient(i);
  return GammaPoly(std::move(c));
}

GammaPoly mul(const GammaPoly& a, const GammaPoly& b) {
  std::vector<Rational> c(a.degree() + b.degree() + 1, Rational(0));
  for (std::size_t i = 0; i <= a.degree(); ++i) {
    if (a.coefficient(i) == 0) continue;
    for (std::size_t j = 0; j <= b.degree(); ++j) {
      c[i + j] += a.coefficient(i) * b.coefficient(j);
    }
  }
  return GammaPoly(std::move(c));
}

GammaPoly scale(const GammaPoly& a, const Rational& s) {
  std::vector<Rational> c(a.coefficients());
  for (auto& q : c) q *= s;
  return GammaPoly(std::move(c));
}

std::string to_string(const GammaPoly& a) {
  std::string out;
  for (std::size_t i = 0; i <= a.degree(); ++i) {
    if (i) out += " ";
    out += to_string(a.coefficient(i));
  }
  return out;
}

namespace {

// Series in w with GammaPoly coefficients.
using PolySeries = std::vector<GammaPoly>;

// exp of a poly-coefficient series with zero constant term, by the ODE
// recurrence n E_n = sum k S_k E_{n-k}.
PolySeries exp_poly_series(const PolySeries& s, std::size_t order) {
  PolySeries e(order + 1);
  e[0] = GammaPoly::constant(Rational(1));
  for (std::size_t n = 1; n <= order; ++n) {
    GammaPoly acc;
    std::size_t kmax = std::min(n, s.size() - 1);
    for (std::size_t k = 1; k <= kmax; ++k) {
      acc = add(acc, scale(mul(s[k], e[n - k]), Rational(static_cast<long>(k))));
    }
    e[n] = scale(acc, Rational(1, static_cast<long>(n)));
  }
  return e;
}

PolySeries mul_poly_rational(const PolySeries& a, const RationalSeries& b, std::size_t order) {
  PolySeries r(order + 1);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order && j <= b.order(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] = add(r[i + j], scale(a[i], b[j]));
    }
  }
  return r;
}

} // namespace

GammaPolySeries g_expansion(std::size_t kmax) {
  std::size_t order = kmax + 1; // need series through w^{kmax+1}
  RationalSeries tau = revert_saddle_map(order + 1);

  // log tau; tau^{gamma-1} = exp((gamma-1) log tau)
  RationalSeries ltau = log_series(tau, order);
  PolySeries exponent(order + 1);
  for (std::size_t i = 1; i <= order; ++i) {
    // (gamma - 1) * ltau_i
    exponent[i] = GammaPoly({-ltau[i], ltau[i]});
  }
  PolySeries tau_pow = exp_poly_series(exponent, order);

  // 1 - tau = -w u(w), u(0) = 1;  1/(1-tau) = -(1/w) u^{-1}
  RationalSeries u(order);
  for (std::size_t i = 0; i <= order; ++i) u[i] = tau[i + 1];
  RationalSeries uinv = reciprocal(u, order);

  RationalSeries dtau = derivative(tau); // order = order

  RationalSeries reg = mul(uinv, dtau, order);
  PolySeries v = mul_poly_rational(tau_pow, reg, order);

  // expression = -(1/w) V(w) = -V_0/w - sum_k V_{k+1} w^k
  GammaPolySeries out;
  if (!(v[0] == GammaPoly::constant(Rational(1)))) {
    throw InvariantViolation("g_expansion: singular residue is not -1");
  }
  out.singular_residue = Rational(-1);
  out.coeffs.resize(kmax + 1);
  for (std::size_t k = 0; k <= kmax; ++k) {
    out.coeffs[k] = scale(v[k + 1], Rational(-1));
  }
  return out;
}

namespace {
std::mutex g_cache_mutex;
std::shared_ptr<const std::vector<GammaPoly>> g_cache; // build-once snapshots
} // namespace

std::vector<GammaPoly> g_polynomials(std::size_t kmax) {
  std::shared_ptr<const std::vector<GammaPoly>> snap;
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    if (!g_cache || g_cache->size() <= kmax) {
      g_cache = std::make_shared<const std::vector<GammaPoly>>(g_expansion(kmax).coeffs);
    }
    snap = g_cache;
  }
  return {snap->begin(), snap->begin() + static_cast<std::ptrdiff_t>(kmax + 1)};
}

GammaPoly scale_ghat(std::size_t k, const GammaPoly& g) {
  if (k % 2 != 0) throw UsageError("scale_ghat: k must be even");
  Rational f(1);
  for (std::size_t i = 0; i < k; ++i) f *= 6;
  return scale(g, f);
}

BigReal eval_gamma_poly(const GammaPoly& poly, const BigReal& gamma, Precision p) {
  BigReal acc(0, p);
  for (std::size_t i = poly.degree() + 1; i-- > 0;) {
    acc = add(mul(acc, gamma, p), to_bigreal(poly.coefficient(i), p), p);
  }
  return acc;
}

} // namespace stokesline::exactpoly
