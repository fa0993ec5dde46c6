#ifndef STOKESLINE_BIGCOMPLEX_HPP
#define STOKESLINE_BIGCOMPLEX_HPP

#include "stokesline/bigreal.hpp"

namespace stokesline {

// Componentwise complex value over BigReal.  Used for values living on the
// cut, e.g. K_nu(x e^{+-pi i}) and the K-side remainder G_nu.
struct BigComplex {
  BigReal re;
  BigReal im;

  BigComplex() = default;
  explicit BigComplex(Precision p) : re(p), im(p) {}
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
  // purely real
  static BigComplex real(BigReal r, Precision p) { return {std::move(r), BigReal(0, p)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

BigComplex add(const BigComplex& x, const BigComplex& y, Precision p);
BigComplex sub(const BigComplex& x, const BigComplex& y, Precision p);
BigComplex mul(const BigComplex& x, const BigComplex& y, Precision p);
BigComplex div(const BigComplex& x, const BigComplex& y, Precision p);
BigComplex mul(const BigComplex& x, const BigReal& s, Precision p);
BigComplex neg(const BigComplex& x, Precision p);
BigComplex conj(const BigComplex& x, Precision p);
BigReal abs(const BigComplex& x, Precision p);

// e^{i phi} = cos phi + i sin phi
BigComplex unit_phase(const BigReal& phi, Precision p);
// e^{i pi t} with exact lattice values via cos_pi/sin_pi
BigComplex unit_phase_pi(const BigReal& t, Precision p);

} // namespace stokesline

#endif
