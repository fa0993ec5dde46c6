#ifndef STOKESLINE_ORACLE_HPP
#define STOKESLINE_ORACLE_HPP

#include "stokesline/bigcomplex.hpp"
#include "stokesline/coefficients.hpp"
#include "stokesline/expansions.hpp"

namespace stokesline::oracle {

using coeffs::BesselOrder;
using expansions::StokesSign;

// Accuracy request for the reference values.  The working precision is
// derived per call as target_digits + estimated cancellation + guard
// digits, never guessed.
struct OracleConfig {
  long target_digits = 30;
  long cancellation_guard = 15;

  OracleConfig() = default;
  explicit OracleConfig(long digits, long guard = 15)
      : target_digits(digits), cancellation_guard(guard) {
    if (digits < 10) throw UsageError("OracleConfig: target_digits must be >= 10");
  }

  // Working precision for a computation that loses `cancel_digits` decimal
  // digits to cancellation.
  Precision working_precision(long cancel_digits = 0) const {
    return Precision::for_digits(target_digits + cancel_digits + cancellation_guard);
  }
};

// Decimal digits lost when an exponentially large sum ~e^{scale} is
// cancelled down to ~e^{-scale}: ceil(scale * log10 e) per e-folding pair.
long cancellation_digits(const BigReal& exponent_scale);

// I_nu(x) by the convergent power series; rigorous tail cut.
BigReal bessel_i_series(const BesselOrder& nu, const BigReal& x, const OracleConfig& cfg);

// K_nu(x) via the connection K = pi/2 (I_{-nu} - I_nu)/sin(pi nu);
// integer nu is out of scope and raises DomainError.
BigReal bessel_k_real(const BesselOrder& nu, const BigReal& x, const OracleConfig& cfg);

// K_nu(x e^{+-pi i}) = e^{-+pi nu i} K_nu(x) -+ i pi I_nu(x).
BigComplex k_on_stokes_line(const BesselOrder& nu, const BigReal& x, StokesSign sign,
                            const OracleConfig& cfg);

// F_nu(x) = I_nu(x) - e^x/sqrt(2 pi x) sum_{k<m_o} (-)^k a_k(nu) x^-k.
// Exactly real; magnitude ~ e^{-x}.  Raises PrecisionError if the
// cancellation exceeded the computed budget.
BigReal f_remainder(const BesselOrder& nu, const BigReal& x, const OracleConfig& cfg);

// G_nu(x) = K_nu(x e^{pi i}) + i sqrt(pi/2x) e^x sum_{k<m_o} (-)^k a_k x^-k
// (conjugate on the lower Stokes line).
BigComplex g_remainder(const BesselOrder& nu, const BigReal& x, StokesSign sign,
                       const OracleConfig& cfg);

// 1F1(a; b; z) by the convergent Taylor series.
BigComplex kummer_m_series(const BigReal& a, const BigReal& b, const BigComplex& z,
                           const OracleConfig& cfg);

// U(a, b, x e^{+-pi i}) by the two-1F1 connection with explicit branch
// x^{1-b} e^{+-pi i(1-b)}; requires non-integer b.
BigComplex u_on_stokes_line(const BigReal& a, const BigReal& b, const BigReal& x,
                            StokesSign sign, const OracleConfig& cfg);

} // namespace stokesline::oracle

#endif
