#include <doctest.h>

#include <string>

#include "stokesline/oracle.hpp"

using namespace stokesline;
using namespace stokesline::oracle;

namespace {

const OracleConfig cfg30(30);

BigReal rel_err(const BigReal& got, const BigReal& want, Precision p) {
  return abs(div(sub(got, want, p), want, p), p);
}

bool rel_below(const BigReal& got, const BigReal& want, const char* bound, Precision p) {
  return rel_err(got, want, p) <= BigReal::from_decimal(bound, p);
}

} // namespace

TEST_CASE("half-integer closed forms for I and K") {
  Precision p = cfg30.working_precision();
  BigReal half = BigReal::from_decimal("0.5", p);
  for (const char* xs : {"5", "10", "25"}) {
    CAPTURE(xs);
    BigReal x = BigReal::from_decimal(xs, p);
    BigReal pref = sqrt(div(BigReal(2, p), mul(pi_const(p), x, p), p), p);
    BigReal ex = exp(x, p), emx = exp(neg(x, p), p);
    BigReal sinh_x = div(sub(ex, emx, p), BigReal(2, p), p);
    BigReal cosh_x = div(add(ex, emx, p), BigReal(2, p), p);

    BigReal i_half = bessel_i_series(BesselOrder(half), x, cfg30);
    CHECK(rel_below(i_half, mul(pref, sinh_x, p), "1e-29", p));

    BigReal i_mhalf = bessel_i_series(BesselOrder(neg(half, p)), x, cfg30);
    CHECK(rel_below(i_mhalf, mul(pref, cosh_x, p), "1e-29", p));

    // K_{1/2}(x) = sqrt(pi/2x) e^{-x}; bessel_k_real needs non-half-integer
    // nu for its sin(pi nu) connection, so evaluate the limit-free formula
    // through nu = 1/2 + tiny is not needed: K uses I_{-nu} - I_nu which is
    // regular at nu = 1/2.
    BigReal k_half = bessel_k_real(BesselOrder(half), x, cfg30);
    BigReal k_expect = mul(sqrt(div(pi_const(p), mul(BigReal(2, p), x, p), p), p), emx, p);
    CHECK(rel_below(k_half, k_expect, "1e-29", p));
  }
}

TEST_CASE("Wronskian I_nu K_{nu+1} + I_{nu+1} K_nu = 1/x") {
  Precision p = cfg30.working_precision();
  BigReal nu = BigReal::from_decimal("0.25", p);
  BigReal nu1 = add(nu, BigReal(1, p), p);
  for (const char* xs : {"5", "10", "25"}) {
    CAPTURE(xs);
    BigReal x = BigReal::from_decimal(xs, p);
    BigReal lhs = add(mul(bessel_i_series(BesselOrder(nu), x, cfg30),
                          bessel_k_real(BesselOrder(nu1), x, cfg30), p),
                      mul(bessel_i_series(BesselOrder(nu1), x, cfg30),
                          bessel_k_real(BesselOrder(nu), x, cfg30), p), p);
    CHECK(rel_below(lhs, div(BigReal(1, p), x, p), "1e-28", p));
  }
}

TEST_CASE("three-term recurrence I_{nu-1} - I_{nu+1} = (2nu/x) I_nu") {
  Precision p = cfg30.working_precision();
  BigReal nu = BigReal::from_decimal("0.75", p);
  BigReal x = BigReal::from_decimal("12.5", p);
  BigReal lhs = sub(bessel_i_series(BesselOrder(sub(nu, BigReal(1, p), p)), x, cfg30),
                    bessel_i_series(BesselOrder(add(nu, BigReal(1, p), p)), x, cfg30), p);
  BigReal rhs = mul(div(mul(BigReal(2, p), nu, p), x, p),
                    bessel_i_series(BesselOrder(nu), x, cfg30), p);
  CHECK(rel_below(lhs, rhs, "1e-28", p));
}

TEST_CASE("integer nu is out of scope for the K connection") {
  BigReal x(10, cfg30.working_precision());
  CHECK_THROWS_AS(bessel_k_real(BesselOrder(BigReal(1, x.prec())), x, cfg30), DomainError);
  CHECK_THROWS_AS(bessel_k_real(BesselOrder(BigReal(0, x.prec())), x, cfg30), DomainError);
}

TEST_CASE("K on the Stokes line: connection and conjugate symmetry") {
  Precision p = cfg30.working_precision();
  BesselOrder nu(BigReal::from_decimal("0.25", p));
  BigReal x(10, p);
  BigComplex plus = k_on_stokes_line(nu, x, StokesSign::plus, cfg30);
  BigComplex minus = k_on_stokes_line(nu, x, StokesSign::minus, cfg30);
  // conjugate pair
  CHECK(rel_below(plus.re, minus.re, "1e-28", p));
  CHECK(rel_below(plus.im, neg(minus.im, p), "1e-28", p));
  // K_nu(x e^{pi i}) = e^{-pi nu i} K_nu(x) - i pi I_nu(x)
  BigReal kx = bessel_k_real(nu, x, cfg30);
  BigReal ix = bessel_i_series(nu, x, cfg30);
  BigComplex expect = sub(mul(unit_phase_pi(neg(nu.nu, p), p), kx, p),
                          BigComplex(BigReal(0, p), mul(pi_const(p), ix, p)), p);
  CHECK(rel_below(plus.re, expect.re, "1e-28", p));
  CHECK(rel_below(plus.im, expect.im, "1e-28", p));
}

TEST_CASE("frozen remainder values behind the tables") {
  OracleConfig cfg(15);
  BesselOrder nu(BigReal::from_decimal("0.25", cfg.working_precision()));
  Precision p = cfg.working_precision();

  CHECK(f_remainder(nu, BigReal(10, p), cfg).to_paper(10) == "-3.539843604(-06)");
  CHECK(f_remainder(nu, BigReal::from_decimal("15.4", p), cfg).to_paper(10) ==
        "-1.151885294(-08)");
  CHECK(f_remainder(nu, BigReal(20, p), cfg).to_paper(10) == "-1.185757399(-10)");

  BigComplex g = g_remainder(nu, BigReal(25, p), StokesSign::plus, cfg);
  CHECK(g.re.to_paper(10) == "2.452537123(-12)");
  CHECK(g.im.to_paper(10) == "-1.839452296(-13)");
}

TEST_CASE("g_remainder conjugate symmetry across the cut") {
  OracleConfig cfg(15);
  Precision p = cfg.working_precision();
  BesselOrder nu(BigReal::from_decimal("0.25", p));
  BigComplex gp = g_remainder(nu, BigReal(25, p), StokesSign::plus, cfg);
  BigComplex gm = g_remainder(nu, BigReal(25, p), StokesSign::minus, cfg);
  CHECK(rel_below(gp.re, gm.re, "1e-13", p));
  CHECK(rel_below(gp.im, neg(gm.im, p), "1e-13", p));
}

TEST_CASE("remainders are stable under extra precision") {
  OracleConfig lo(15), hi(35);
  BesselOrder nu(BigReal::from_decimal("0.25", lo.working_precision()));
  Precision p = hi.working_precision();
  for (const char* xs : {"10", "15.4", "20"}) {
    CAPTURE(xs);
    BigReal f_lo = f_remainder(nu, BigReal::from_decimal(xs, lo.working_precision()), lo);
    BigReal f_hi = f_remainder(nu, BigReal::from_decimal(xs, hi.working_precision()), hi);
    CHECK(rel_below(f_lo, f_hi, "1e-13", p));
  }
}

TEST_CASE("1F1 series basics") {
  Precision p = cfg30.working_precision();
  BigReal a = BigReal::from_decimal("0.75", p);
  BigReal b = BigReal::from_decimal("1.5", p);
  BigComplex zero(BigReal(0, p), BigReal(0, p));
  BigComplex one = kummer_m_series(a, b, zero, cfg30);
  CHECK(one.re == BigReal(1, p));
  CHECK(one.im.is_zero());

  // M(a, a, z) = e^z
  BigComplex z(BigReal::from_decimal("2.5", p), BigReal(0, p));
  BigComplex ez = kummer_m_series(a, a, z, cfg30);
  CHECK(rel_below(ez.re, exp(z.re, p), "1e-29", p));

  // conjugate symmetry for real parameters
  BigComplex zc(BigReal(1, p), BigReal(2, p));
  BigComplex m1 = kummer_m_series(a, b, zc, cfg30);
  BigComplex m2 = kummer_m_series(a, b, conj(zc, p), cfg30);
  CHECK(rel_below(m1.re, m2.re, "1e-29", p));
  CHECK(rel_below(m1.im, neg(m2.im, p), "1e-29", p));
}

TEST_CASE("1F1 ties to the Bessel I series") {
  // I_nu(x) = (x/2)^nu e^{-x} / Gamma(nu+1) * 1F1(nu+1/2; 2nu+1; 2x)
  Precision p = cfg30.working_precision();
  BigReal nu = BigReal::from_decimal("0.25", p);
  BigReal x = BigReal::from_decimal("7.5", p);
  BigReal a = add(nu, BigReal::from_decimal("0.5", p), p);
  BigReal b = add(mul(BigReal(2, p), nu, p), BigReal(1, p), p);
  BigComplex m = kummer_m_series(a, b, BigComplex(add(x, x, p), BigReal(0, p)), cfg30);
  BigReal pref = div(mul(pow(div(x, BigReal(2, p), p), nu, p), exp(neg(x, p), p), p),
                     gamma(add(nu, BigReal(1, p), p), p), p);
  CHECK(rel_below(mul(m.re, pref, p), bessel_i_series(BesselOrder(nu), x, cfg30),
                  "1e-28", p));
}

TEST_CASE("U on the Stokes line ties to K") {
  // K_nu(x e^{pi i}) = (2x)^nu e^{pi nu i} sqrt(pi) e^x U(nu+1/2, 2nu+1, 2x e^{pi i})
  Precision p = cfg30.working_precision();
  BigReal nu = BigReal::from_decimal("0.25", p);
  BigReal x(10, p);
  BigReal two_x = add(x, x, p);
  BigReal a = add(nu, BigReal::from_decimal("0.5", p), p);
  BigReal b = add(mul(BigReal(2, p), nu, p), BigReal(1, p), p);
  BigComplex u = u_on_stokes_line(a, b, two_x, StokesSign::plus, cfg30);
  BigComplex fac = mul(unit_phase_pi(nu, p),
                       mul(pow(two_x, nu, p), mul(sqrt(pi_const(p), p), exp(x, p), p), p),
                       p);
  BigComplex rhs = mul(fac, u, p);
  BigComplex k = k_on_stokes_line(BesselOrder(nu), x, StokesSign::plus, cfg30);
  CHECK(rel_below(rhs.re, k.re, "1e-27", p));
  CHECK(rel_below(rhs.im, k.im, "1e-27", p));
}

TEST_CASE("integer b is out of scope for the U connection") {
  Precision p = cfg30.working_precision();
  CHECK_THROWS_AS(u_on_stokes_line(BigReal::from_decimal("0.5", p), BigReal(2, p),
                                   BigReal(10, p), StokesSign::plus, cfg30),
                  DomainError);
}

TEST_CASE("OracleConfig guards its contract") {
  CHECK_THROWS_AS(OracleConfig(5), UsageError);
  OracleConfig c(12);
  CHECK(c.working_precision(0).bits() >= Precision::for_digits(27).bits());
  // cancellation estimate: ~22 digits at scale 2x = 50
  Precision p(128);
  long lost = cancellation_digits(BigReal(50, p));
  CHECK(lost >= 22);
  CHECK(lost <= 25);
}
