#ifndef STOKESLINE_COEFFICIENTS_HPP
#define STOKESLINE_COEFFICIENTS_HPP

#include <vector>

#include "stokesline/bigreal.hpp"

namespace stokesline::coeffs {

// Order nu of the modified Bessel functions.  Parameters are restricted to
// real orders.
struct BesselOrder {
  BigReal nu;

  explicit BesselOrder(BigReal v) : nu(std::move(v)) {}

  // 2 nu an odd integer
  bool is_half_integer() const;
};

// Kummer parameter pair (a, b); theta = a - b drives the Stokes-line
// trigonometry and 2a - b the optimal truncation offset.
struct KummerParams {
  BigReal a;
  BigReal b;

  KummerParams(BigReal a_, BigReal b_) : a(std::move(a_)), b(std::move(b_)) {}

  BigReal theta(Precision p) const { return sub(a, b, p); }
  BigReal two_a_minus_b(Precision p) const { return sub(add(a, a, p), b, p); }

  // Bessel specialization a = nu + 1/2, b = 2 nu + 1 (then 2a - b = 0).
  static KummerParams for_bessel(const BesselOrder& order, Precision p);
};

// Optimal truncation bookkeeping: m_o = floor(x_scale - (2a-b)), with
// alpha = m_o - (x_scale - (2a-b)) in (-1, 0].  A coefficient set is bound
// to one TruncationInfo because B_j depend on alpha.
struct TruncationInfo {
  long m_o;
  BigReal alpha;
  BigReal x_scale;
};

struct CoefficientSet {
  std::vector<BigReal> a_k;
  std::vector<BigReal> A_j;
  std::vector<BigReal> B_j;
  BigReal alpha;
  int M = 0;
};

// a_k(nu) for k = 0..kmax by the recurrence
// a_k = -a_{k-1} (1/2+nu+k-1)(1/2-nu+k-1) / (2k), a_0 = 1.
std::vector<BigReal> a_coeffs(const BesselOrder& nu, int kmax, Precision p);

// A_j = (1-a)_j (b-a)_j / j! via A_j = A_{j-1} (j-a)(b-a+j-1)/j, A_0 = 1;
// satisfies a_j(nu) = (-2)^{-j} A_j at the Bessel parameters.
std::vector<BigReal> A_coeffs(const KummerParams& params, int jmax, Precision p);

// Floor rule (see TruncationInfo); throws DomainError when the resulting
// m_o < 1 (optimal truncation meaningless).
TruncationInfo optimal_truncation(const BigReal& x_scale, const BigReal& two_a_minus_b);

// gamma_j = alpha - j for j = 0..M-1.
std::vector<BigReal> gamma_offsets(const TruncationInfo& trunc, int M, Precision p);

// B_j = sum_{k=0}^{j} (-2)^k (1/2)_k A_{j-k} g_{2k}(alpha - (j-k)).
std::vector<BigReal> B_coeffs(const KummerParams& params, const TruncationInfo& trunc,
                              int M, Precision p);

// Bundles the three sequences for one (params, trunc) pair.
CoefficientSet make_coefficient_set(const BesselOrder& nu, const KummerParams& params,
                                    const TruncationInfo& trunc, int M, Precision p);

} // namespace stokesline::coeffs

#endif
