#ifndef STOKESLINE_EXPANSIONS_HPP
#define STOKESLINE_EXPANSIONS_HPP

#include <optional>
#include <vector>

#include "stokesline/bigcomplex.hpp"
#include "stokesline/coefficients.hpp"

namespace stokesline::expansions {

using coeffs::BesselOrder;
using coeffs::KummerParams;
using coeffs::TruncationInfo;

// Selects arg z = +pi or -pi.
enum class StokesSign : int { plus = +1, minus = -1 };

inline int sign_value(StokesSign s) { return static_cast<int>(s); }

// Term-by-term breakdown of one expansion evaluation.
//   dominant    = optimally truncated dominant (or algebraic) sum, prefactor
//                 included
//   subdominant = exponentially small contribution
//   terms_dominant has trunc.m_o entries (M entries for the naive
//                 comparators); terms_sub holds the M terms of the first
//                 subdominant series followed by the M terms of the second,
//                 each with its prefactor
//   brace       = Stokes-multiplier diagnostic, present for the K/U forms
struct ExpansionResult {
  BigComplex dominant;
  BigComplex subdominant;
  std::vector<BigComplex> terms_dominant;
  std::vector<BigComplex> terms_sub;
  TruncationInfo trunc;
  int M = 0;
  std::optional<BigComplex> brace;

  BigComplex total(Precision p) const { return add(dominant, subdominant, p); }
};

// Naive compound Poincare expansion of e^{-pi nu i} I_nu(x e^{pi i}), both
// series truncated at M terms, no optimal truncation.  Comparison baseline
// only: its exponentially small part is complex for non-half-integer nu.
ExpansionResult i_poincare(const BesselOrder& nu, const BigReal& x, int M, Precision p);

// Exponentially improved expansion of e^{-pi nu i} I_nu(x e^{pi i})
// (equivalently of I_nu(x)) on the Stokes line; the subdominant part is
// real by construction for real nu.
ExpansionResult i_stokes(const BesselOrder& nu, const BigReal& x, int M, Precision p);

// Naive compound expansion of K_nu(x e^{pi i}) with the full 2 cos(pi nu)
// multiplier; comparison baseline only.
ExpansionResult k_naive_stokes(const BesselOrder& nu, const BigReal& x, int M, Precision p);

// Exponentially improved expansion of K_nu(x e^{+-pi i}); the brace field
// carries the Stokes-multiplier diagnostic.
ExpansionResult k_stokes(const BesselOrder& nu, const BigReal& x, int M, StokesSign sign,
                         Precision p);

// Exponentially improved expansion of U(a, b, x e^{+-pi i}).  Requires
// a, 1+a-b not in {0, -1, -2, ...}.
ExpansionResult u_stokes(const KummerParams& params, const BigReal& x, int M,
                         StokesSign sign, Precision p);

// Exponentially improved expansion of Gamma(a)/Gamma(b) 1F1(a; b; -x).
// Requires theta = a - b non-integer and b - a not in {0, -1, ...}.
ExpansionResult kummer_stokes(const KummerParams& params, const BigReal& x, int M,
                              Precision p);

// The curly-brace value of the K/U forms; 1/2 to leading order.
BigComplex stokes_multiplier(const ExpansionResult& result);

} // namespace stokesline::expansions

#endif
