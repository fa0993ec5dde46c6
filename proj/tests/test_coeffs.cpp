#include <doctest.h>

#include <random>
#include <vector>

#include "stokesline/coefficients.hpp"
#include "stokesline/gamma_poly.hpp"

using namespace stokesline;
using namespace stokesline::coeffs;
using exactpoly::Rational;
using exactpoly::rational;

namespace {

const Precision p128(128);

bool within_ulp(const BigReal& a, const BigReal& b, double ulps, Precision p) {
  return ulp_distance(a, b, p).to_double() <= ulps;
}

// a_k via the classical product formula
// a_k = (4nu^2-1)(4nu^2-9)...(4nu^2-(2k-1)^2) / (8^k k!), k >= 1.
BigReal a_product_formula(const BigReal& nu, int k, Precision p) {
  if (k == 0) return BigReal(1, p);
  BigReal four_nu2 = mul(BigReal(4, p), mul(nu, nu, p), p);
  BigReal num(1, p);
  for (int i = 1; i <= k; ++i) {
    long odd = 2 * i - 1;
    num = mul(num, sub(four_nu2, BigReal(odd * odd, p), p), p);
  }
  BigReal den(1, p);
  for (int i = 1; i <= k; ++i) den = mul(den, BigReal(8 * i, p), p);
  return div(num, den, p);
}

// Exact-rational reference for the full B_j construction at rational nu and
// alpha.  Completely independent of the BigReal code path in B_coeffs.
std::vector<Rational> b_rational_oracle(const Rational& nu, const Rational& alpha, int M) {
  Rational a = nu + rational(1, 2);
  Rational b = 2 * nu + 1;
  // A_j = (1-a)_j (b-a)_j / j!
  std::vector<Rational> A{Rational(1)};
  for (int j = 1; j < M; ++j) {
    A.push_back(A.back() * (Rational(j) - a) * (b - a + Rational(j - 1)) / Rational(j));
  }
  // c_k = (-2)^k (1/2)_k
  std::vector<Rational> c{Rational(1)};
  for (int k = 1; k < M; ++k) c.push_back(c.back() * Rational(1 - 2 * k));

  auto g = exactpoly::g_polynomials(static_cast<std::size_t>(2 * (M - 1)));
  std::vector<Rational> B;
  for (int j = 0; j < M; ++j) {
    Rational sum(0);
    for (int k = 0; k <= j; ++k) {
      Rational gamma_jk = alpha - Rational(j - k);
      sum += c[static_cast<std::size_t>(k)] * A[static_cast<std::size_t>(j - k)] *
             g[static_cast<std::size_t>(2 * k)].eval(gamma_jk);
    }
    B.push_back(sum);
  }
  return B;
}

} // namespace

TEST_CASE("a_k recurrence matches the product formula for random nu") {
  std::mt19937 rng(20240817u);
  std::uniform_real_distribution<double> dist(0.01, 3.0);
  for (int trial = 0; trial < 10; ++trial) {
    // snap to a 1/1024 lattice so the decimal parse is exact
    long q = static_cast<long>(dist(rng) * 1024.0);
    BigReal nu_v = div(BigReal(q, p128), BigReal(1024, p128), p128);
    BesselOrder nu(nu_v);
    auto a = a_coeffs(nu, 20, p128);
    for (int k = 0; k <= 20; ++k) {
      CAPTURE(trial);
      CAPTURE(k);
      CHECK(within_ulp(a[static_cast<std::size_t>(k)],
                       a_product_formula(nu_v, k, p128), 8, p128));
    }
  }
}

TEST_CASE("a_1(1/4) = -3/32") {
  BesselOrder nu(BigReal::from_decimal("0.25", p128));
  auto a = a_coeffs(nu, 1, p128);
  CHECK(a[1] == exactpoly::to_bigreal(rational(-3, 32), p128));
}

TEST_CASE("a_j(nu) = (-2)^{-j} A_j at the Bessel parameters") {
  std::mt19937 rng(987654u);
  std::uniform_real_distribution<double> dist(0.01, 2.0);
  for (int trial = 0; trial < 6; ++trial) {
    long q = static_cast<long>(dist(rng) * 512.0);
    BigReal nu_v = div(BigReal(q, p128), BigReal(512, p128), p128);
    BesselOrder nu(nu_v);
    KummerParams params = KummerParams::for_bessel(nu, p128);
    auto a = a_coeffs(nu, 16, p128);
    auto A = A_coeffs(params, 16, p128);
    BigReal pw(1, p128); // (-2)^{-j}
    for (int j = 0; j <= 16; ++j) {
      CAPTURE(trial);
      CAPTURE(j);
      CHECK(within_ulp(a[static_cast<std::size_t>(j)],
                       mul(pw, A[static_cast<std::size_t>(j)], p128), 8, p128));
      pw = div(pw, BigReal(-2, p128), p128);
    }
  }
}

TEST_CASE("half-integer degeneration: a_k(1/2) = 0 exactly for k >= 1") {
  BesselOrder nu(BigReal::from_decimal("0.5", p128));
  CHECK(nu.is_half_integer());
  auto a = a_coeffs(nu, 10, p128);
  for (int k = 1; k <= 10; ++k) {
    CAPTURE(k);
    CHECK(a[static_cast<std::size_t>(k)].is_zero());
  }
  // A_j vanish too: (1-a)_j = (1/2 - nu)_j = (0)_j
  auto A = A_coeffs(KummerParams::for_bessel(nu, p128), 6, p128);
  for (int j = 1; j <= 6; ++j) CHECK(A[static_cast<std::size_t>(j)].is_zero());
}

TEST_CASE("nu -> -nu symmetry is exact") {
  BigReal nu_v = BigReal::from_decimal("0.3125", p128);
  auto ap = a_coeffs(BesselOrder(nu_v), 12, p128);
  auto am = a_coeffs(BesselOrder(neg(nu_v, p128)), 12, p128);
  for (int k = 0; k <= 12; ++k) {
    CAPTURE(k);
    CHECK(ap[static_cast<std::size_t>(k)] == am[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("optimal_truncation floor rule") {
  BigReal zero(0, p128);

  auto t20 = optimal_truncation(BigReal(20, p128), zero);
  CHECK(t20.m_o == 20);
  CHECK(t20.alpha.is_zero());

  auto t205 = optimal_truncation(BigReal::from_decimal("20.5", p128), zero);
  CHECK(t205.m_o == 20);
  CHECK(t205.alpha == BigReal::from_decimal("-0.5", p128));

  BigReal xs308 = BigReal::from_decimal("30.8", p128);
  auto t308 = optimal_truncation(xs308, zero);
  CHECK(t308.m_o == 30);
  // alpha = m_o - x_scale exactly (the subtraction is exact at this scale)
  CHECK(add(t308.alpha, xs308, p128.plus(64)) == BigReal(30, p128));
  CHECK(t308.alpha < zero);
  CHECK(t308.alpha > BigReal(-1, p128));

  // 2a - b shifts the index
  auto ts = optimal_truncation(BigReal(10, p128), BigReal(2, p128));
  CHECK(ts.m_o == 8);
  CHECK(ts.alpha.is_zero());

  CHECK_THROWS_AS(optimal_truncation(BigReal::from_decimal("0.5", p128), zero),
                  DomainError);
  CHECK_THROWS_AS(optimal_truncation(neg(BigReal(3, p128), p128), zero), DomainError);
}

TEST_CASE("gamma_offsets are alpha - j") {
  auto t = optimal_truncation(BigReal::from_decimal("20.5", p128), BigReal(0, p128));
  auto g = gamma_offsets(t, 4, p128);
  REQUIRE(g.size() == 4);
  for (int j = 0; j < 4; ++j) {
    CHECK(g[static_cast<std::size_t>(j)] ==
          sub(t.alpha, BigReal(j, p128), p128));
  }
  CHECK_THROWS_AS(gamma_offsets(t, 0, p128), UsageError);
}

TEST_CASE("B_0 = 2/3 - alpha") {
  BesselOrder nu(BigReal::from_decimal("0.25", p128));
  KummerParams params = KummerParams::for_bessel(nu, p128);

  auto t_int = optimal_truncation(BigReal(50, p128), BigReal(0, p128));
  auto B = B_coeffs(params, t_int, 1, p128);
  CHECK(B[0] == exactpoly::to_bigreal(rational(2, 3), p128));

  // x_scale = 10.25 -> m_o = 10, alpha = -1/4, B_0 = 2/3 + 1/4 = 11/12
  auto t_frac = optimal_truncation(BigReal::from_decimal("10.25", p128), BigReal(0, p128));
  auto B2 = B_coeffs(params, t_frac, 1, p128);
  CHECK(within_ulp(B2[0], exactpoly::to_bigreal(rational(11, 12), p128), 4, p128));
}

TEST_CASE("B_1(nu=1/4, alpha=0) = 491/2160") {
  // frozen from the exact-rational construction:
  // A_1 g_0(-1) - g_2(0) = (3/16)(5/3) - 23/270 = 491/2160
  BesselOrder nu(BigReal::from_decimal("0.25", p128));
  KummerParams params = KummerParams::for_bessel(nu, p128);
  auto t = optimal_truncation(BigReal(20, p128), BigReal(0, p128));
  auto B = B_coeffs(params, t, 2, p128);
  CHECK(within_ulp(B[1], exactpoly::to_bigreal(rational(491, 2160), p128), 8, p128));
}

TEST_CASE("B_j match the exact-rational oracle") {
  struct Case {
    const char* nu_dec;
    Rational nu_q;
    const char* x_scale_dec;
    Rational alpha_q;
  };
  // alpha_q = floor(x_scale) - x_scale
  std::vector<Case> cases = {
      {"0.25", rational(1, 4), "50", Rational(0)},
      {"0.25", rational(1, 4), "30.75", rational(-3, 4)},
      {"0.75", rational(3, 4), "24.5", rational(-1, 2)},
      {"0.125", rational(1, 8), "41.25", rational(-1, 4)},
  };
  for (const auto& c : cases) {
    CAPTURE(c.nu_dec);
    CAPTURE(c.x_scale_dec);
    BesselOrder nu(BigReal::from_decimal(c.nu_dec, p128));
    KummerParams params = KummerParams::for_bessel(nu, p128);
    auto t = optimal_truncation(BigReal::from_decimal(c.x_scale_dec, p128),
                                BigReal(0, p128));
    int M = 6;
    auto B = B_coeffs(params, t, M, p128);
    auto Bq = b_rational_oracle(c.nu_q, c.alpha_q, M);
    for (int j = 0; j < M; ++j) {
      CAPTURE(j);
      CHECK(within_ulp(B[static_cast<std::size_t>(j)],
                       exactpoly::to_bigreal(Bq[static_cast<std::size_t>(j)], p128), 16,
                       p128));
    }
  }
}

TEST_CASE("B_j symmetric under nu -> -nu") {
  auto t = optimal_truncation(BigReal(20, p128), BigReal(0, p128));
  BigReal nu_v = BigReal::from_decimal("0.25", p128);
  auto Bp = B_coeffs(KummerParams::for_bessel(BesselOrder(nu_v), p128), t, 5, p128);
  auto Bm = B_coeffs(KummerParams::for_bessel(BesselOrder(neg(nu_v, p128)), p128), t, 5,
                     p128);
  for (int j = 0; j < 5; ++j) {
    CAPTURE(j);
    CHECK(within_ulp(Bp[static_cast<std::size_t>(j)], Bm[static_cast<std::size_t>(j)], 4,
                     p128));
  }
}

TEST_CASE("make_coefficient_set bundles consistently") {
  BesselOrder nu(BigReal::from_decimal("0.25", p128));
  KummerParams params = KummerParams::for_bessel(nu, p128);
  CHECK(params.two_a_minus_b(p128).is_zero());
  CHECK(params.theta(p128) == BigReal::from_decimal("-0.75", p128));
  auto t = optimal_truncation(BigReal(20, p128), BigReal(0, p128));
  auto set = make_coefficient_set(nu, params, t, 7, p128);
  CHECK(set.M == 7);
  CHECK(set.a_k.size() == 7);
  CHECK(set.A_j.size() == 7);
  CHECK(set.B_j.size() == 7);
  CHECK(set.alpha == t.alpha);
  auto B = B_coeffs(params, t, 7, p128);
  for (int j = 0; j < 7; ++j) {
    CHECK(set.B_j[static_cast<std::size_t>(j)] == B[static_cast<std::size_t>(j)]);
  }
}
