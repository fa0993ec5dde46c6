#include "stokesline/bigcomplex.hpp"

namespace stokesline {

BigComplex add(const BigComplex& x, const BigComplex& y, Precision p) {
  return {add(x.re, y.re, p), add(x.im, y.im, p)};
}

BigComplex sub(const BigComplex& x, const BigComplex& y, Precision p) {
  return {sub(x.re, y.re, p), sub(x.im, y.im, p)};
}

BigComplex mul(const BigComplex& x, const BigComplex& y, Precision p) {
  BigReal re = sub(mul(x.re, y.re, p), mul(x.im, y.im, p), p);
  BigReal im = add(mul(x.re, y.im, p), mul(x.im, y.re, p), p);
  return {std::move(re), std::move(im)};
}

BigComplex div(const BigComplex& x, const BigComplex& y, Precision p) {
  BigReal d = add(mul(y.re, y.re, p), mul(y.im, y.im, p), p);
  if (d.is_zero()) throw DomainError("complex div: division by zero");
  BigReal re = div(add(mul(x.re, y.re, p), mul(x.im, y.im, p), p), d, p);
  BigReal im = div(sub(mul(x.im, y.re, p), mul(x.re, y.im, p), p), d, p);
  return {std::move(re), std::move(im)};
}

BigComplex mul(const BigComplex& x, const BigReal& s, Precision p) {
  return {mul(x.re, s, p), mul(x.im, s, p)};
}

BigComplex neg(const BigComplex& x, Precision p) {
  return {neg(x.re, p), neg(x.im, p)};
}

BigComplex conj(const BigComplex& x, Precision p) {
  return {x.re, neg(x.im, p)};
}

BigReal abs(const BigComplex& x, Precision p) {
  BigReal m = add(mul(x.re, x.re, p), mul(x.im, x.im, p), p);
  return sqrt(m, p);
}

BigComplex unit_phase(const BigReal& phi, Precision p) {
  return {cos(phi, p), sin(phi, p)};
}

BigComplex unit_phase_pi(const BigReal& t, Precision p) {
  return {cos_pi(t, p), sin_pi(t, p)};
}

} // namespace stokesline
