#include "stokesline/oracle.hpp"

#include <cmath>

namespace stokesline::oracle {

long cancellation_digits(const BigReal& exponent_scale) {
  double s = exponent_scale.to_double();
  if (s < 0) s = 0;
  return static_cast<long>(std::ceil(s * 0.43429448190325176)) + 2;
}

namespace {

using expansions::sign_value;

// Tail policy: stop once |term| < 2^-p |partial sum| for three consecutive
// terms, and never before the index has passed the term-magnitude hump.
struct TailCut {
  long min_index;
  long bits;
  int below = 0;

  bool done(const BigReal& term_mag, const BigReal& sum_mag, long k, Precision p) {
    if (k < min_index) return false;
    BigReal threshold = sum_mag;
    mpfr_mul_2si(threshold.raw(), threshold.raw(), -bits, MPFR_RNDN);
    if (compare(term_mag, threshold) < 0) {
      if (++below >= 3) return true;
    } else {
      below = 0;
    }
    return false;
  }
};

BigReal dominant_sum(const BesselOrder& nu, const BigReal& x, long m_o, Precision p) {
  auto a = coeffs::a_coeffs(nu, static_cast<int>(m_o) - 1, p);
  BigReal sum(0, p);
  BigReal xk(1, p);
  for (long k = 0; k < m_o; ++k) {
    BigReal t = div(a[static_cast<std::size_t>(k)], xk, p);
    if (k % 2 != 0) t = neg(t, p);
    sum = add(sum, t, p);
    xk = mul(xk, x, p);
  }
  return sum;
}

BigReal i_series_at(const BesselOrder& nu, const BigReal& x, Precision p) {
  if (x.sgn() <= 0) throw DomainError("bessel_i_series: x must be positive");
  if (nu.nu.is_integer() && nu.nu.sgn() < 0) {
    throw DomainError("bessel_i_series: nu must not be a negative integer");
  }
  BigReal half_x = div(x, BigReal(2, p), p);
  BigReal q = mul(half_x, half_x, p); // (x/2)^2
  BigReal t = div(pow(half_x, nu.nu, p), gamma(add(nu.nu, BigReal(1, p), p), p), p);
  BigReal sum = t;
  TailCut cut{static_cast<long>(x.to_double()) + 1, p.bits()};
  for (long k = 1;; ++k) {
    BigReal denom = mul(BigReal(k, p), add(BigReal(k, p), nu.nu, p), p);
    t = div(mul(t, q, p), denom, p);
    sum = add(sum, t, p);
    if (cut.done(abs(t, p), abs(sum, p), k, p)) break;
    if (k > 1000000) throw PrecisionError("bessel_i_series: series did not terminate");
  }
  return sum;
}

} // namespace

BigReal bessel_i_series(const BesselOrder& nu, const BigReal& x, const OracleConfig& cfg) {
  Precision p = cfg.working_precision();
  Precision result_p = Precision::for_digits(cfg.target_digits);
  return add(i_series_at(nu, x, p), BigReal(0, result_p), result_p);
}

BigReal bessel_k_real(const BesselOrder& nu, const BigReal& x, const OracleConfig& cfg) {
  if (nu.nu.is_integer()) {
    throw DomainError("bessel_k_real: integer nu is out of scope (limit form not implemented)");
  }
  // I_{+-nu} ~ e^x while K ~ e^{-x}: budget 2x digits of cancellation
  long cancel = cancellation_digits(add(x, x, x.prec()));
  Precision p = cfg.working_precision(cancel);
  BigReal x_p = add(x, BigReal(0, p), p);
  BigReal i_pos = i_series_at(nu, x_p, p);
  BigReal i_neg = i_series_at(BesselOrder(neg(nu.nu, p)), x_p, p);
  BigReal s = sin_pi(nu.nu, p);
  BigReal k = div(mul(div(pi_const(p), BigReal(2, p), p), sub(i_neg, i_pos, p), p), s, p);
  return k;
}

BigComplex k_on_stokes_line(const BesselOrder& nu, const BigReal& x, StokesSign sign,
                            const OracleConfig& cfg) {
  long cancel = cancellation_digits(add(x, x, x.prec()));
  Precision p = cfg.working_precision(cancel);
  BigReal x_p = add(x, BigReal(0, p), p);
  BigReal k = bessel_k_real(nu, x_p, cfg);
  BigReal i = i_series_at(nu, x_p, p);
  int sg = sign_value(sign);
  // e^{-+ pi nu i} K -+ i pi I
  BigReal c = cos_pi(nu.nu, p);
  BigReal s = sin_pi(nu.nu, p);
  BigReal re = mul(c, k, p);
  BigReal im_phase = mul(s, k, p);
  BigReal pi_i = mul(pi_const(p), i, p);
  BigReal im = sg > 0 ? neg(add(im_phase, pi_i, p), p) : add(im_phase, pi_i, p);
  return {std::move(re), std::move(im)};
}

BigReal f_remainder(const BesselOrder& nu, const BigReal& x, const OracleConfig& cfg) {
  BigReal two_x = add(x, x, x.prec());
  long cancel = cancellation_digits(two_x);
  Precision p = cfg.working_precision(cancel);
  BigReal x_p = add(x, BigReal(0, p), p);

  auto trunc = coeffs::optimal_truncation(add(x_p, x_p, p), BigReal(0, p));
  BigReal i_val = i_series_at(nu, x_p, p);
  BigReal two_pi_x = mul(mul(BigReal(2, p), pi_const(p), p), x_p, p);
  BigReal pref = div(exp(x_p, p), sqrt(two_pi_x, p), p);
  BigReal dom = mul(pref, dominant_sum(nu, x_p, trunc.m_o, p), p);
  BigReal f = sub(i_val, dom, p);

  // precision honesty: digits actually surviving the cancellation
  if (!f.is_zero()) {
    long lost_bits = mpfr_get_exp(i_val.raw()) - mpfr_get_exp(f.raw());
    long needed = static_cast<long>(cfg.target_digits * 3.3219280948873623) + 8;
    if (p.bits() - lost_bits < needed) {
      throw PrecisionError("f_remainder: cancellation exceeded the computed budget");
    }
  }
  return f;
}

BigComplex g_remainder(const BesselOrder& nu, const BigReal& x, StokesSign sign,
                       const OracleConfig& cfg) {
  BigReal two_x = add(x, x, x.prec());
  long cancel = cancellation_digits(two_x);
  Precision p = cfg.working_precision(cancel);
  BigReal x_p = add(x, BigReal(0, p), p);

  BigComplex k_line = k_on_stokes_line(nu, x_p, sign, cfg);
  auto trunc = coeffs::optimal_truncation(add(x_p, x_p, p), BigReal(0, p));
  BigReal mag = mul(mul(sqrt(div(pi_const(p), add(x_p, x_p, p), p), p), exp(x_p, p), p),
                    dominant_sum(nu, x_p, trunc.m_o, p), p);
  // +- i sqrt(pi/2x) e^x sum
  int sg = sign_value(sign);
  BigComplex corr(BigReal(0, p), sg > 0 ? mag : neg(mag, p));
  BigComplex g = add(k_line, corr, p);

  if (!g.im.is_zero()) {
    long lost_bits = mpfr_get_exp(k_line.im.raw()) - mpfr_get_exp(g.im.raw());
    long needed = static_cast<long>(cfg.target_digits * 3.3219280948873623) + 8;
    if (p.bits() - lost_bits < needed) {
      throw PrecisionError("g_remainder: cancellation exceeded the computed budget");
    }
  }
  return g;
}

BigComplex kummer_m_series(const BigReal& a, const BigReal& b, const BigComplex& z,
                           const OracleConfig& cfg) {
  if (b.is_integer() && b.sgn() <= 0) {
    throw DomainError("kummer_m_series: b must not be a non-positive integer");
  }
  Precision pz = z.re.prec();
  BigReal z_mag = abs(z, pz);
  long cancel = cancellation_digits(add(z_mag, z_mag, pz));
  Precision p = cfg.working_precision(cancel);

  BigComplex t(BigReal(1, p), BigReal(0, p));
  BigComplex sum = t;
  BigComplex z_p(add(z.re, BigReal(0, p), p), add(z.im, BigReal(0, p), p));
  TailCut cut{static_cast<long>(z_mag.to_double()) + 1, p.bits()};
  for (long k = 1;; ++k) {
    BigReal km1(k - 1, p);
    BigReal ratio_num = add(a, km1, p);
    BigReal ratio_den = mul(add(b, km1, p), BigReal(k, p), p);
    t = mul(mul(t, z_p, p), div(ratio_num, ratio_den, p), p);
    sum = add(sum, t, p);
    if (cut.done(abs(t, p), abs(sum, p), k, p)) break;
    if (k > 1000000) throw PrecisionError("kummer_m_series: series did not terminate");
  }
  return sum;
}

BigComplex u_on_stokes_line(const BigReal& a, const BigReal& b, const BigReal& x,
                            StokesSign sign, const OracleConfig& cfg) {
  if (b.is_integer()) {
    throw DomainError("u_on_stokes_line: integer b is out of scope (use the Bessel route)");
  }
  long cancel = cancellation_digits(add(x, x, x.prec()));
  Precision p = cfg.working_precision(cancel);
  BigReal x_p = add(x, BigReal(0, p), p);
  int sg = sign_value(sign);

  BigReal one(1, p);
  BigReal one_minus_b = sub(one, b, p);
  BigReal a_b1 = add(sub(a, b, p), one, p); // a - b + 1
  BigReal two_minus_b = sub(BigReal(2, p), b, p);

  BigComplex minus_x(neg(x_p, p), BigReal(0, p));
  BigComplex m1 = kummer_m_series(a, b, minus_x, cfg);
  BigComplex m2 = kummer_m_series(a_b1, two_minus_b, minus_x, cfg);

  BigReal c1 = div(gamma(one_minus_b, p), gamma(a_b1, p), p);
  BigReal c2 = div(gamma(sub(b, one, p), p), gamma(a, p), p);

  // z^{1-b} on arg z = +-pi: x^{1-b} e^{+-pi i (1-b)}
  BigReal mag = pow(x_p, one_minus_b, p);
  BigReal ph = one_minus_b;
  BigComplex branch(cos_pi(ph, p), sg > 0 ? sin_pi(ph, p) : neg(sin_pi(ph, p), p));

  BigComplex term1 = mul(m1, c1, p);
  BigComplex term2 = mul(mul(mul(branch, mag, p), c2, p), m2, p);
  return add(term1, term2, p);
}

} // namespace stokesline::oracle
