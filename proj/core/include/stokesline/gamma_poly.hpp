#ifndef STOKESLINE_GAMMA_POLY_HPP
#define STOKESLINE_GAMMA_POLY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "stokesline/rational_series.hpp"

namespace stokesline::exactpoly {

// Polynomial in gamma with exact rational coefficients, ascending powers.
// Houses the g_k(j) family viewed as functions of gamma_j.
class GammaPoly {
public:
  GammaPoly() : c_(1, Rational(0)) {}
  explicit GammaPoly(std::vector<Rational> coeffs);
  static GammaPoly constant(Rational v) { return GammaPoly({std::move(v)}); }

  std::size_t degree() const { return c_.size() - 1; }
  bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }
  const Rational& coefficient(std::size_t i) const { return c_[i]; }
  const std::vector<Rational>& coefficients() const { return c_; }

  Rational eval(const Rational& gamma) const;

  bool operator==(const GammaPoly& o) const { return c_ == o.c_; }

private:
  std::vector<Rational> c_; // trailing zeros stripped; zero poly is {0}
};

GammaPoly add(const GammaPoly& a, const GammaPoly& b);
GammaPoly sub(const GammaPoly& a, const GammaPoly& b);
GammaPoly mul(const GammaPoly& a, const GammaPoly& b);
GammaPoly scale(const GammaPoly& a, const Rational& s);
std::string to_string(const GammaPoly& a);

// Series in w whose coefficients are polynomials in gamma, together with
// the -1/w singular part of the defining expansion
//   tau^{gamma-1}/(1-tau) dtau/dw = residue/w + sum_k coeffs[k] w^k.
struct GammaPolySeries {
  Rational singular_residue; // must be exactly -1
  std::vector<GammaPoly> coeffs;
};

// Expands tau^{gamma-1}/(1-tau) dtau/dw about w = 0 and checks that the
// singular residue is exactly -1; coeffs[k] is g_k as a polynomial in gamma.
GammaPolySeries g_expansion(std::size_t kmax);

// g_0 ... g_kmax; both even and odd indices are produced (only the even
// ones enter the Stokes-line expansions).  Results are cached and
// immutable once built; safe for concurrent readers.
std::vector<GammaPoly> g_polynomials(std::size_t kmax);

// ghat_k = 6^k g_k for even k.
GammaPoly scale_ghat(std::size_t k, const GammaPoly& g);

// Horner evaluation with each rational coefficient converted at p.
BigReal eval_gamma_poly(const GammaPoly& poly, const BigReal& gamma, Precision p);

} // namespace stokesline::exactpoly

#endif
