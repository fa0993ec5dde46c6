#include "stokesline/bigreal.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace stokesline {

Precision Precision::for_digits(long decimal_digits) {
  if (decimal_digits < 1) throw UsageError("Precision::for_digits: digits must be >= 1");
  // log2(10) = 3.3219...; 8 guard bits for the final decimal rounding.
  long bits = static_cast<long>(std::ceil(decimal_digits * 3.3219280948873623)) + 8;
  return Precision(bits < kMinBits ? kMinBits : bits);
}

BigReal BigReal::from_decimal(std::string_view s, Precision p) {
  BigReal r(p);
  std::string buf(s);
  if (mpfr_set_str(r.raw(), buf.c_str(), 10, MPFR_RNDN) != 0 || r.is_nan()) {
    throw UsageError("BigReal::from_decimal: cannot parse '" + buf + "'");
  }
  return r;
}

namespace {

// digits/exponent pair from mpfr_get_str: value = 0.<digits> * 10^exp10.
struct DecimalParts {
  bool negative = false;
  std::string digits;
  long exp10 = 0;
};

DecimalParts decimal_parts(mpfr_srcptr v, long sig_digits) {
  DecimalParts out;
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig_digits), v, MPFR_RNDN);
  if (s == nullptr) throw PrecisionError("mpfr_get_str failed");
  const char* digits = s;
  if (*digits == '-') {
    out.negative = true;
    ++digits;
  }
  out.digits = digits;
  out.exp10 = static_cast<long>(e);
  mpfr_free_str(s);
  return out;
}

} // namespace

std::string BigReal::to_sci(long digits) const {
  if (digits < 1) throw UsageError("to_sci: digits must be >= 1");
  if (is_nan()) return "nan";
  if (is_zero()) {
    std::string z = "0.";
    z.append(static_cast<size_t>(digits > 1 ? digits - 1 : 1), '0');
    return z + "e+00";
  }
  DecimalParts d = decimal_parts(v_, digits);
  std::string out = d.negative ? "-" : "";
  out += d.digits.substr(0, 1);
  out += ".";
  out += d.digits.substr(1);
  long e = d.exp10 - 1;
  char ebuf[32];
  std::snprintf(ebuf, sizeof ebuf, "e%+03ld", e);
  out += ebuf;
  return out;
}

std::string BigReal::to_paper(long digits) const {
  if (digits < 1) throw UsageError("to_paper: digits must be >= 1");
  if (is_nan()) return "nan";
  if (is_zero()) {
    std::string z = "0.";
    z.append(static_cast<size_t>(digits > 1 ? digits - 1 : 1), '0');
    return z + "(+00)";
  }
  DecimalParts d = decimal_parts(v_, digits);
  std::string out = d.negative ? "-" : "";
  out += d.digits.substr(0, 1);
  out += ".";
  out += d.digits.substr(1);
  long e = d.exp10 - 1;
  char ebuf[32];
  std::snprintf(ebuf, sizeof ebuf, "(%+03ld)", e);
  out += ebuf;
  return out;
}

// ---- arith ----------------------------------------------------------------

#define STOKESLINE_BINOP(name, mpfr_fn)                               \
  BigReal name(const BigReal& x, const BigReal& y, Precision p) {     \
    BigReal r(p);                                                     \
    mpfr_fn(r.raw(), x.raw(), y.raw(), MPFR_RNDN);                    \
    return r;                                                         \
  }

STOKESLINE_BINOP(add, mpfr_add)
STOKESLINE_BINOP(sub, mpfr_sub)
STOKESLINE_BINOP(mul, mpfr_mul)
#undef STOKESLINE_BINOP

BigReal div(const BigReal& x, const BigReal& y, Precision p) {
  if (y.is_zero()) throw DomainError("div: division by zero");
  BigReal r(p);
  mpfr_div(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigReal sqrt(const BigReal& x, Precision p) {
  if (x.sgn() < 0) throw DomainError("sqrt: negative argument");
  BigReal r(p);
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal neg(const BigReal& x, Precision p) {
  BigReal r(p);
  mpfr_neg(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal abs(const BigReal& x, Precision p) {
  BigReal r(p);
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

int compare(const BigReal& x, const BigReal& y) { return mpfr_cmp(x.raw(), y.raw()); }

// ---- elementary -----------------------------------------------------------

BigReal exp(const BigReal& x, Precision p) {
  BigReal r(p);
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal log(const BigReal& x, Precision p) {
  if (x.sgn() <= 0) throw DomainError("log: argument must be positive");
  BigReal r(p);
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal sin(const BigReal& x, Precision p) {
  BigReal r(p);
  mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal cos(const BigReal& x, Precision p) {
  BigReal r(p);
  mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& x, const BigReal& y, Precision p) {
  BigReal r(p);
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigReal pi_const(Precision p) {
  BigReal r(p);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigReal cos_pi(const BigReal& x, Precision p) {
  // Exact on the half-integer lattice: cos(pi n) = +-1, cos(pi(n + 1/2)) = 0.
  BigReal two_x = add(x, x, p);
  if (two_x.is_integer()) {
    if (x.is_integer()) {
      long n = x.to_long();
      return BigReal((n % 2 == 0) ? 1 : -1, p);
    }
    return BigReal(0, p);
  }
  return cos(mul(pi_const(p), x, p), p);
}

BigReal sin_pi(const BigReal& x, Precision p) {
  BigReal two_x = add(x, x, p);
  if (two_x.is_integer()) {
    if (x.is_integer()) return BigReal(0, p);
    // x = n + 1/2: sin = (-1)^n
    BigReal half = div(BigReal(1, p), BigReal(2, p), p);
    long n = sub(x, half, p).to_long();
    long m = ((n % 2) + 2) % 2;
    return BigReal(m == 0 ? 1 : -1, p);
  }
  return sin(mul(pi_const(p), x, p), p);
}

// ---- gamma ----------------------------------------------------------------

BigReal gamma(const BigReal& x, Precision p) {
  if (x.is_integer() && x.sgn() <= 0) {
    throw DomainError("gamma: pole at non-positive integer");
  }
  BigReal r(p);
  mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

// ---- operators ------------------------------------------------------------

namespace {
Precision max_prec(const BigReal& a, const BigReal& b) {
  long pa = a.prec().bits(), pb = b.prec().bits();
  return Precision(pa > pb ? pa : pb);
}
} // namespace

BigReal operator+(const BigReal& a, const BigReal& b) { return add(a, b, max_prec(a, b)); }
BigReal operator-(const BigReal& a, const BigReal& b) { return sub(a, b, max_prec(a, b)); }
BigReal operator*(const BigReal& a, const BigReal& b) { return mul(a, b, max_prec(a, b)); }
BigReal operator/(const BigReal& a, const BigReal& b) { return div(a, b, max_prec(a, b)); }
BigReal operator-(const BigReal& a) { return neg(a, a.prec()); }

BigReal ulp_distance(const BigReal& a, const BigReal& b, Precision p) {
  BigReal diff = abs(sub(a, b, p.plus(16)), p.plus(16));
  if (diff.is_zero()) return BigReal(0, p);
  // ulp scale from a, or from b when a is exactly zero
  mpfr_exp_t ea = a.is_zero() ? mpfr_get_exp(b.raw()) : mpfr_get_exp(a.raw());
  BigReal ulp(1, p);
  mpfr_mul_2si(ulp.raw(), ulp.raw(), ea - p.bits(), MPFR_RNDN);
  return div(diff, ulp, p);
}

} // namespace stokesline
