#include "stokesline/coefficients.hpp"

#include "stokesline/gamma_poly.hpp"

namespace stokesline::coeffs {

bool BesselOrder::is_half_integer() const {
  Precision p = nu.prec();
  BigReal two_nu = add(nu, nu, p);
  if (!two_nu.is_integer()) return false;
  long n = two_nu.to_long();
  return n % 2 != 0;
}

KummerParams KummerParams::for_bessel(const BesselOrder& order, Precision p) {
  BigReal half = div(BigReal(1, p), BigReal(2, p), p);
  BigReal a = add(order.nu, half, p);
  BigReal b = add(add(order.nu, order.nu, p), BigReal(1, p), p);
  return {std::move(a), std::move(b)};
}

std::vector<BigReal> a_coeffs(const BesselOrder& nu, int kmax, Precision p) {
  if (kmax < 0) throw UsageError("a_coeffs: kmax must be >= 0");
  std::vector<BigReal> a;
  a.reserve(static_cast<std::size_t>(kmax) + 1);
  a.emplace_back(1, p);
  BigReal half = div(BigReal(1, p), BigReal(2, p), p);
  for (int k = 1; k <= kmax; ++k) {
    BigReal km1(k - 1, p);
    BigReal f1 = add(add(half, nu.nu, p), km1, p);  // 1/2 + nu + k - 1
    BigReal f2 = add(sub(half, nu.nu, p), km1, p);  // 1/2 - nu + k - 1
    BigReal num = mul(f1, f2, p);
    BigReal t = div(mul(a.back(), num, p), BigReal(2 * k, p), p);
    a.push_back(neg(t, p));
  }
  return a;
}

std::vector<BigReal> A_coeffs(const KummerParams& params, int jmax, Precision p) {
  if (jmax < 0) throw UsageError("A_coeffs: jmax must be >= 0");
  std::vector<BigReal> A;
  A.reserve(static_cast<std::size_t>(jmax) + 1);
  A.emplace_back(1, p);
  // A_j = (1-a)_j (b-a)_j / j!, the coefficients of the algebraic series of
  // U(b-a, b, .) that the terminant resummation attaches to.  For the Bessel
  // parameters a = nu+1/2, b = 2nu+1 this gives a_j(nu) = (-2)^{-j} A_j.
  BigReal b_minus_a = sub(params.b, params.a, p);
  for (int j = 1; j <= jmax; ++j) {
    BigReal jr(j, p);
    BigReal f = mul(sub(jr, params.a, p),
                    add(b_minus_a, BigReal(j - 1, p), p), p);
    A.push_back(div(mul(A.back(), f, p), jr, p));
  }
  return A;
}

TruncationInfo optimal_truncation(const BigReal& x_scale, const BigReal& two_a_minus_b) {
  if (x_scale.sgn() <= 0) throw DomainError("optimal_truncation: x_scale must be positive");
  long bits = x_scale.prec().bits();
  Precision p(bits < 128 ? 128 : bits);
  BigReal t = sub(x_scale, two_a_minus_b, p);
  BigReal m(p);
  // m_o = floor(x_scale - (2a-b)): truncate the dominant series just before
  // its least term, so alpha = m_o - (x_scale - (2a-b)) lies in (-1, 0] and
  // vanishes exactly when the scale is an integer.
  mpfr_rint(m.raw(), t.raw(), MPFR_RNDD);
  long m_o = m.to_long();
  if (m_o < 1) {
    throw DomainError(
        "optimal_truncation: m_o < 1; the argument is too small for optimal "
        "truncation to be meaningful");
  }
  BigReal alpha = sub(m, t, p);
  return {m_o, std::move(alpha), x_scale};
}

std::vector<BigReal> gamma_offsets(const TruncationInfo& trunc, int M, Precision p) {
  if (M < 1) throw UsageError("gamma_offsets: M must be >= 1");
  std::vector<BigReal> g;
  g.reserve(static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j) {
    g.push_back(sub(trunc.alpha, BigReal(j, p), p));
  }
  return g;
}

std::vector<BigReal> B_coeffs(const KummerParams& params, const TruncationInfo& trunc,
                              int M, Precision p) {
  if (M < 1) throw UsageError("B_coeffs: M must be >= 1");
  auto g = exactpoly::g_polynomials(static_cast<std::size_t>(2 * (M - 1)));
  std::vector<BigReal> A = A_coeffs(params, M - 1, p);

  // c_k = (-2)^k (1/2)_k; c_0 = 1, c_k = c_{k-1} (1 - 2k)
  std::vector<BigReal> c;
  c.reserve(static_cast<std::size_t>(M));
  c.emplace_back(1, p);
  for (int k = 1; k < M; ++k) {
    c.push_back(mul(c.back(), BigReal(1 - 2 * k, p), p));
  }

  std::vector<BigReal> B;
  B.reserve(static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j) {
    BigReal sum(0, p);
    for (int k = 0; k <= j; ++k) {
      BigReal gamma_jk = sub(trunc.alpha, BigReal(j - k, p), p);
      BigReal gval =
          exactpoly::eval_gamma_poly(g[static_cast<std::size_t>(2 * k)], gamma_jk, p);
      BigReal term = mul(mul(c[static_cast<std::size_t>(k)],
                             A[static_cast<std::size_t>(j - k)], p),
                         gval, p);
      sum = add(sum, term, p);
    }
    B.push_back(sum);
  }
  return B;
}

CoefficientSet make_coefficient_set(const BesselOrder& nu, const KummerParams& params,
                                    const TruncationInfo& trunc, int M, Precision p) {
  CoefficientSet out;
  out.a_k = a_coeffs(nu, M - 1, p);
  out.A_j = A_coeffs(params, M - 1, p);
  out.B_j = B_coeffs(params, trunc, M, p);
  out.alpha = trunc.alpha;
  out.M = M;
  return out;
}

} // namespace stokesline::coeffs
