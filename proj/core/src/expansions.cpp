#include "stokesline/expansions.hpp"

namespace stokesline::expansions {

namespace {

BigReal half_of(Precision p) { return div(BigReal(1, p), BigReal(2, p), p); }

// is a non-positive integer
bool nonpos_int(const BigReal& v) { return v.is_integer() && v.sgn() <= 0; }

// e^x / sqrt(2 pi x)
BigReal dominant_prefactor(const BigReal& x, Precision p) {
  BigReal two_pi_x = mul(mul(BigReal(2, p), pi_const(p), p), x, p);
  return div(exp(x, p), sqrt(two_pi_x, p), p);
}

// sqrt(pi / (2x))
BigReal k_prefactor(const BigReal& x, Precision p) {
  return sqrt(div(pi_const(p), add(x, x, p), p), p);
}

// Pochhammer-product terms (a)_k (1+a-b)_k / (k! x^k), k = 0..n-1.
std::vector<BigReal> u_algebraic_terms(const KummerParams& params, const BigReal& x,
                                       long n, Precision p) {
  std::vector<BigReal> t;
  t.reserve(static_cast<std::size_t>(n));
  t.emplace_back(1, p);
  BigReal one_pab = add(sub(params.a, params.b, p), BigReal(1, p), p);
  for (long k = 1; k < n; ++k) {
    BigReal km1(k - 1, p);
    BigReal f = mul(add(params.a, km1, p), add(one_pab, km1, p), p);
    t.push_back(div(mul(t.back(), f, p), mul(BigReal(k, p), x, p), p));
  }
  return t;
}

} // namespace

ExpansionResult i_poincare(const BesselOrder& nu, const BigReal& x, int M, Precision p) {
  if (x.sgn() <= 0) throw DomainError("i_poincare: x must be positive");
  if (M < 1) throw UsageError("i_poincare: M must be >= 1");

  ExpansionResult r;
  r.M = M;
  r.trunc = {M, BigReal(0, p), add(x, x, p)};

  auto a = coeffs::a_coeffs(nu, M - 1, p);
  BigReal pref_d = dominant_prefactor(x, p);
  BigReal pref_s = div(exp(neg(x, p), p), sqrt(mul(mul(BigReal(2, p), pi_const(p), p), x, p), p), p);

  // -i e^{-pi nu i} = -sin(pi nu) - i cos(pi nu)
  BigComplex sub_factor(neg(sin_pi(nu.nu, p), p), neg(cos_pi(nu.nu, p), p));

  BigReal xk(1, p);
  BigComplex dom(BigReal(0, p), BigReal(0, p));
  BigComplex sd(BigReal(0, p), BigReal(0, p));
  for (int k = 0; k < M; ++k) {
    BigReal base = div(a[static_cast<std::size_t>(k)], xk, p);
    BigReal td = mul(pref_d, base, p);
    if (k % 2 != 0) td = neg(td, p);
    r.terms_dominant.push_back(BigComplex::real(td, p));
    dom = add(dom, r.terms_dominant.back(), p);
    BigComplex ts = mul(sub_factor, mul(pref_s, base, p), p);
    r.terms_sub.push_back(ts);
    sd = add(sd, ts, p);
    xk = mul(xk, x, p);
  }
  r.dominant = std::move(dom);
  r.subdominant = std::move(sd);
  return r;
}

ExpansionResult i_stokes(const BesselOrder& nu, const BigReal& x, int M, Precision p) {
  if (x.sgn() <= 0) throw DomainError("i_stokes: x must be positive");
  if (M < 1) throw UsageError("i_stokes: M must be >= 1");

  ExpansionResult r;
  r.M = M;
  BigReal two_x = add(x, x, p);
  r.trunc = coeffs::optimal_truncation(two_x, BigReal(0, p));

  KummerParams params = KummerParams::for_bessel(nu, p);
  auto B = coeffs::B_coeffs(params, r.trunc, M, p);
  int kmax = static_cast<int>(r.trunc.m_o) - 1;
  if (M - 1 > kmax) kmax = M - 1;
  auto a = coeffs::a_coeffs(nu, kmax, p);

  // theta = -nu - 1/2
  BigReal theta = neg(add(nu.nu, half_of(p), p), p);
  BigReal cos_t = cos_pi(theta, p);
  BigReal sin_t = sin_pi(theta, p);

  BigReal pref_d = dominant_prefactor(x, p);
  BigReal xk(1, p);
  BigComplex dom(BigReal(0, p), BigReal(0, p));
  for (long k = 0; k < r.trunc.m_o; ++k) {
    BigReal td = mul(pref_d, div(a[static_cast<std::size_t>(k)], xk, p), p);
    if (k % 2 != 0) td = neg(td, p);
    r.terms_dominant.push_back(BigComplex::real(td, p));
    dom = add(dom, r.terms_dominant.back(), p);
    xk = mul(xk, x, p);
  }
  r.dominant = std::move(dom);

  // subdominant, real by construction
  BigReal pref_s =
      div(exp(neg(x, p), p), sqrt(mul(mul(BigReal(2, p), pi_const(p), p), x, p), p), p);
  BigReal sqrt_pi_x = sqrt(mul(pi_const(p), x, p), p);
  BigReal two_x_pow(1, p);
  BigReal sum(0, p);
  xk = BigReal(1, p);
  std::vector<BigReal> first, second;
  for (int k = 0; k < M; ++k) {
    BigReal t1 = mul(mul(pref_s, cos_t, p), div(a[static_cast<std::size_t>(k)], xk, p), p);
    first.push_back(t1);
    BigReal t2 = mul(div(mul(pref_s, sin_t, p), sqrt_pi_x, p),
                     div(B[static_cast<std::size_t>(k)], two_x_pow, p), p);
    if (k % 2 != 0) t2 = neg(t2, p);
    second.push_back(neg(t2, p));
    xk = mul(xk, x, p);
    two_x_pow = mul(two_x_pow, two_x, p);
  }
  for (auto& t : first) {
    sum = add(sum, t, p);
    r.terms_sub.push_back(BigComplex::real(t, p));
  }
  for (auto& t : second) {
    sum = add(sum, t, p);
    r.terms_sub.push_back(BigComplex::real(t, p));
  }
  r.subdominant = BigComplex::real(sum, p);
  return r;
}

ExpansionResult k_naive_stokes(const BesselOrder& nu, const BigReal& x, int M, Precision p) {
  if (x.sgn() <= 0) throw DomainError("k_naive_stokes: x must be positive");
  if (M < 1) throw UsageError("k_naive_stokes: M must be >= 1");

  ExpansionResult r;
  r.M = M;
  r.trunc = {M, BigReal(0, p), add(x, x, p)};

  auto a = coeffs::a_coeffs(nu, M - 1, p);
  BigReal kp = k_prefactor(x, p);
  BigReal pref_dom = mul(kp, exp(x, p), p);                        // with -i phase
  BigReal pref_sub = mul(mul(mul(BigReal(2, p), cos_pi(nu.nu, p), p), kp, p),
                         exp(neg(x, p), p), p);

  BigReal xk(1, p);
  BigComplex dom(BigReal(0, p), BigReal(0, p));
  BigComplex sd(BigReal(0, p), BigReal(0, p));
  for (int k = 0; k < M; ++k) {
    BigReal base = div(a[static_cast<std::size_t>(k)], xk, p);
    BigReal mag = mul(pref_dom, base, p);
    if (k % 2 != 0) mag = neg(mag, p);
    BigComplex td(BigReal(0, p), neg(mag, p)); // -i * mag
    r.terms_dominant.push_back(td);
    dom = add(dom, td, p);
    BigComplex ts = BigComplex::real(mul(pref_sub, base, p), p);
    r.terms_sub.push_back(ts);
    sd = add(sd, ts, p);
    xk = mul(xk, x, p);
  }
  r.dominant = std::move(dom);
  r.subdominant = std::move(sd);
  return r;
}

ExpansionResult k_stokes(const BesselOrder& nu, const BigReal& x, int M, StokesSign sign,
                         Precision p) {
  if (x.sgn() <= 0) throw DomainError("k_stokes: x must be positive");
  if (M < 1) throw UsageError("k_stokes: M must be >= 1");
  int sg = sign_value(sign);

  ExpansionResult r;
  r.M = M;
  BigReal two_x = add(x, x, p);
  r.trunc = coeffs::optimal_truncation(two_x, BigReal(0, p));

  KummerParams params = KummerParams::for_bessel(nu, p);
  auto B = coeffs::B_coeffs(params, r.trunc, M, p);
  int kmax = static_cast<int>(r.trunc.m_o) - 1;
  if (M - 1 > kmax) kmax = M - 1;
  auto a = coeffs::a_coeffs(nu, kmax, p);

  BigReal kp = k_prefactor(x, p);
  BigReal pref_dom = mul(kp, exp(x, p), p);
  BigReal xk(1, p);
  BigComplex dom(BigReal(0, p), BigReal(0, p));
  for (long k = 0; k < r.trunc.m_o; ++k) {
    BigReal mag = mul(pref_dom, div(a[static_cast<std::size_t>(k)], xk, p), p);
    if (k % 2 != 0) mag = neg(mag, p);
    // -+ i
    BigComplex td(BigReal(0, p), sg > 0 ? neg(mag, p) : mag);
    r.terms_dominant.push_back(td);
    dom = add(dom, td, p);
    xk = mul(xk, x, p);
  }
  r.dominant = std::move(dom);

  // brace = 1/2 sum a_k x^-k  -+  i/(2 sqrt(pi x)) sum (-)^j B_j (2x)^-j
  BigReal half = half_of(p);
  BigReal imag_scale = div(half, sqrt(mul(pi_const(p), x, p), p), p);
  BigReal pref_sub = mul(mul(mul(BigReal(2, p), cos_pi(nu.nu, p), p), kp, p),
                         exp(neg(x, p), p), p);

  BigReal sum_re(0, p), sum_im(0, p);
  BigReal two_x_pow(1, p);
  xk = BigReal(1, p);
  std::vector<BigComplex> first, second;
  for (int k = 0; k < M; ++k) {
    BigReal t1 = mul(half, div(a[static_cast<std::size_t>(k)], xk, p), p);
    sum_re = add(sum_re, t1, p);
    first.push_back(mul(BigComplex::real(t1, p), pref_sub, p));
    BigReal t2 = mul(imag_scale, div(B[static_cast<std::size_t>(k)], two_x_pow, p), p);
    if (k % 2 != 0) t2 = neg(t2, p);
    if (sg > 0) t2 = neg(t2, p); // -+ i
    sum_im = add(sum_im, t2, p);
    second.push_back(mul(BigComplex(BigReal(0, p), t2), pref_sub, p));
    xk = mul(xk, x, p);
    two_x_pow = mul(two_x_pow, two_x, p);
  }
  r.brace = BigComplex(sum_re, sum_im);
  r.subdominant = mul(*r.brace, pref_sub, p);
  for (auto& t : first) r.terms_sub.push_back(t);
  for (auto& t : second) r.terms_sub.push_back(t);
  return r;
}

ExpansionResult u_stokes(const KummerParams& params, const BigReal& x, int M,
                         StokesSign sign, Precision p) {
  if (x.sgn() <= 0) throw DomainError("u_stokes: x must be positive");
  if (M < 1) throw UsageError("u_stokes: M must be >= 1");
  BigReal one_pab = add(sub(params.a, params.b, p), BigReal(1, p), p);
  if (nonpos_int(params.a) || nonpos_int(one_pab)) {
    throw DegenerateCaseError(
        "u_stokes: a or 1+a-b is a non-positive integer; the exponentially "
        "small part vanishes, use the algebraic series alone");
  }
  int sg = sign_value(sign);

  ExpansionResult r;
  r.M = M;
  r.trunc = coeffs::optimal_truncation(x, params.two_a_minus_b(p));
  auto B = coeffs::B_coeffs(params, r.trunc, M, p);
  auto A = coeffs::A_coeffs(params, M - 1, p);

  // (x e^{+-pi i})^{-a} = x^{-a} (cos pi a -+ i sin pi a)
  BigReal x_neg_a = pow(x, neg(params.a, p), p);
  BigReal sin_a = sin_pi(params.a, p);
  BigComplex phase(cos_pi(params.a, p), sg > 0 ? neg(sin_a, p) : sin_a);

  auto t = u_algebraic_terms(params, x, r.trunc.m_o, p);
  BigComplex dom(BigReal(0, p), BigReal(0, p));
  for (long k = 0; k < r.trunc.m_o; ++k) {
    BigComplex td = mul(phase, mul(x_neg_a, t[static_cast<std::size_t>(k)], p), p);
    r.terms_dominant.push_back(td);
    dom = add(dom, td, p);
  }
  r.dominant = std::move(dom);

  // C = +-2 pi i e^{-+pi i a} x^{a-b} e^{-x} / (Gamma(a) Gamma(1+a-b))
  BigReal two_pi = mul(BigReal(2, p), pi_const(p), p);
  BigComplex pm_two_pi_i(BigReal(0, p), sg > 0 ? two_pi : neg(two_pi, p));
  BigReal scalar = div(mul(pow(x, params.theta(p), p), exp(neg(x, p), p), p),
                       mul(gamma(params.a, p), gamma(one_pab, p), p), p);
  BigComplex C = mul(mul(pm_two_pi_i, phase, p), scalar, p);

  // brace = 1/2 sum (-)^j A_j x^-j  -+  i/sqrt(2 pi x) sum (-)^j B_j x^-j
  BigReal half = half_of(p);
  BigReal imag_scale = div(BigReal(1, p), sqrt(mul(two_pi, x, p), p), p);
  BigReal sum_re(0, p), sum_im(0, p);
  BigReal xj(1, p);
  std::vector<BigComplex> first, second;
  for (int j = 0; j < M; ++j) {
    BigReal t1 = mul(half, div(A[static_cast<std::size_t>(j)], xj, p), p);
    if (j % 2 != 0) t1 = neg(t1, p);
    sum_re = add(sum_re, t1, p);
    first.push_back(mul(C, BigComplex::real(t1, p), p));
    BigReal t2 = mul(imag_scale, div(B[static_cast<std::size_t>(j)], xj, p), p);
    if (j % 2 != 0) t2 = neg(t2, p);
    if (sg > 0) t2 = neg(t2, p);
    sum_im = add(sum_im, t2, p);
    second.push_back(mul(C, BigComplex(BigReal(0, p), t2), p));
    xj = mul(xj, x, p);
  }
  r.brace = BigComplex(sum_re, sum_im);
  r.subdominant = mul(C, *r.brace, p);
  for (auto& v : first) r.terms_sub.push_back(v);
  for (auto& v : second) r.terms_sub.push_back(v);
  return r;
}

ExpansionResult kummer_stokes(const KummerParams& params, const BigReal& x, int M,
                              Precision p) {
  if (x.sgn() <= 0) throw DomainError("kummer_stokes: x must be positive");
  if (M < 1) throw UsageError("kummer_stokes: M must be >= 1");
  BigReal theta = params.theta(p);
  if (theta.is_integer()) {
    throw DegenerateCaseError(
        "kummer_stokes: theta = a-b is an integer; the algebraic expansion "
        "degenerates (vanishes for theta = n >= 0, has a-b terms for "
        "theta = -n) and the second exponentially small series vanishes");
  }
  BigReal b_minus_a = neg(theta, p);
  if (nonpos_int(b_minus_a)) {
    throw DegenerateCaseError("kummer_stokes: b-a is a non-positive integer (1/Gamma pole)");
  }

  ExpansionResult r;
  r.M = M;
  r.trunc = coeffs::optimal_truncation(x, params.two_a_minus_b(p));
  auto B = coeffs::B_coeffs(params, r.trunc, M, p);
  auto A = coeffs::A_coeffs(params, M - 1, p);

  BigReal alg_pref = mul(pow(x, neg(params.a, p), p),
                         div(gamma(params.a, p), gamma(b_minus_a, p), p), p);
  auto t = u_algebraic_terms(params, x, r.trunc.m_o, p);
  BigReal dom(0, p);
  for (long k = 0; k < r.trunc.m_o; ++k) {
    BigReal td = mul(alg_pref, t[static_cast<std::size_t>(k)], p);
    r.terms_dominant.push_back(BigComplex::real(td, p));
    dom = add(dom, td, p);
  }
  r.dominant = BigComplex::real(dom, p);

  BigReal pref = mul(pow(x, theta, p), exp(neg(x, p), p), p);
  BigReal cos_t = cos_pi(theta, p);
  BigReal sin_t = sin_pi(theta, p);
  BigReal two_pi_x = mul(mul(BigReal(2, p), pi_const(p), p), x, p);
  BigReal sin_scale = div(mul(BigReal(2, p), sin_t, p), sqrt(two_pi_x, p), p);

  BigReal sum(0, p);
  BigReal xj(1, p);
  std::vector<BigReal> first, second;
  for (int j = 0; j < M; ++j) {
    BigReal t1 = mul(cos_t, div(A[static_cast<std::size_t>(j)], xj, p), p);
    if (j % 2 != 0) t1 = neg(t1, p);
    first.push_back(mul(pref, t1, p));
    BigReal t2 = mul(sin_scale, div(B[static_cast<std::size_t>(j)], xj, p), p);
    if (j % 2 != 0) t2 = neg(t2, p);
    second.push_back(neg(mul(pref, t2, p), p));
    xj = mul(xj, x, p);
  }
  for (auto& v : first) {
    sum = add(sum, v, p);
    r.terms_sub.push_back(BigComplex::real(v, p));
  }
  for (auto& v : second) {
    sum = add(sum, v, p);
    r.terms_sub.push_back(BigComplex::real(v, p));
  }
  r.subdominant = BigComplex::real(sum, p);
  return r;
}

BigComplex stokes_multiplier(const ExpansionResult& result) {
  if (!result.brace.has_value()) {
    throw UsageError("stokes_multiplier: result carries no brace diagnostic "
                     "(only k_stokes and u_stokes produce one)");
  }
  return *result.brace;
}

} // namespace stokesline::expansions
