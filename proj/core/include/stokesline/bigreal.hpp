#ifndef STOKESLINE_BIGREAL_HPP
#define STOKESLINE_BIGREAL_HPP

#include <mpfr.h>

#include <string>
#include <string_view>

#include "stokesline/errors.hpp"

namespace stokesline {

// Working mantissa precision in binary digits.  Precision is always an
// explicit parameter; there is no global rounding state.  All arithmetic
// rounds to nearest-even.
class Precision {
public:
  static constexpr long kMinBits = 64;

  explicit Precision(long bits) : bits_(bits) {
    if (bits < kMinBits) throw UsageError("Precision: bits must be >= 64");
  }

  long bits() const { return bits_; }
  Precision plus(long extra) const { return Precision(bits_ + extra); }

  // Enough bits to carry `decimal_digits` significant decimal digits,
  // with a few guard bits for the final rounding.
  static Precision for_digits(long decimal_digits);

private:
  long bits_;
};

// Arbitrary-precision real number backed by MPFR.  Values are immutable
// after construction; every operation takes its target precision
// explicitly and rounds to nearest-even.  MPFR's basic operations are
// correctly rounded (<= 1/2 ulp); exp/log/sin/cos/pow/gamma are correctly
// rounded as well, which is well inside the documented slack of a small
// constant multiple of 1 ulp.
class BigReal {
public:
  BigReal() { mpfr_init2(v_, Precision::kMinBits); mpfr_set_zero(v_, 1); }
  explicit BigReal(Precision p) { mpfr_init2(v_, p.bits()); mpfr_set_zero(v_, 1); }
  BigReal(long n, Precision p) {
    mpfr_init2(v_, p.bits());
    mpfr_set_si(v_, n, MPFR_RNDN);
  }

  BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, Precision::kMinBits);
    mpfr_swap(v_, o.v_);
  }
  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigReal() { mpfr_clear(v_); }

  // Exact scaled-integer decimal conversion, never via machine doubles.
  static BigReal from_decimal(std::string_view s, Precision p);

  Precision prec() const { return Precision(mpfr_get_prec(v_)); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sgn() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  // Scientific decimal string with `digits` significant digits, e.g.
  // "-3.539843604e-06".
  std::string to_sci(long digits) const;
  // Table convention d.ddddddddd(e) meaning d.ddddddddd x 10^e.
  std::string to_paper(long digits) const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

private:
  mpfr_t v_;
};

// ---- arith ----------------------------------------------------------------

BigReal add(const BigReal& x, const BigReal& y, Precision p);
BigReal sub(const BigReal& x, const BigReal& y, Precision p);
BigReal mul(const BigReal& x, const BigReal& y, Precision p);
BigReal div(const BigReal& x, const BigReal& y, Precision p);
BigReal sqrt(const BigReal& x, Precision p);
BigReal neg(const BigReal& x, Precision p);
BigReal abs(const BigReal& x, Precision p);
int compare(const BigReal& x, const BigReal& y);

// ---- elementary functions -------------------------------------------------

BigReal exp(const BigReal& x, Precision p);
BigReal log(const BigReal& x, Precision p);
BigReal sin(const BigReal& x, Precision p);
BigReal cos(const BigReal& x, Precision p);
BigReal pow(const BigReal& x, const BigReal& y, Precision p);
BigReal pi_const(Precision p);

// cos(pi x) / sin(pi x) with exact values whenever 2x is an integer, so
// half-integer degenerations produce exact zeros rather than residuals.
BigReal cos_pi(const BigReal& x, Precision p);
BigReal sin_pi(const BigReal& x, Precision p);

// ---- gamma ----------------------------------------------------------------

// Correctly rounded Gamma(x); pole at non-positive integers raises
// DomainError.
BigReal gamma(const BigReal& x, Precision p);

// ---- convenience operators ------------------------------------------------
// Result precision is the larger of the operand precisions.  Internal code
// that keeps every operand at one working precision composes naturally.

BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
BigReal operator/(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a);

inline bool operator==(const BigReal& a, const BigReal& b) { return compare(a, b) == 0; }
inline bool operator!=(const BigReal& a, const BigReal& b) { return compare(a, b) != 0; }
inline bool operator<(const BigReal& a, const BigReal& b) { return compare(a, b) < 0; }
inline bool operator<=(const BigReal& a, const BigReal& b) { return compare(a, b) <= 0; }
inline bool operator>(const BigReal& a, const BigReal& b) { return compare(a, b) > 0; }
inline bool operator>=(const BigReal& a, const BigReal& b) { return compare(a, b) >= 0; }

// |a - b| measured in ulps of a at precision p (ulp = 2^(exp(a) - bits)).
// Returns +inf-like large value if a is zero and b is not.
BigReal ulp_distance(const BigReal& a, const BigReal& b, Precision p);

} // namespace stokesline

#endif
