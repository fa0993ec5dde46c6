#ifndef STOKESLINE_RATIONAL_HPP
#define STOKESLINE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "stokesline/bigreal.hpp"

namespace stokesline::exactpoly {

// Exact rational, always canonical (lowest terms, positive denominator).
// GMP's mpq_class keeps arithmetic results canonical.
using Rational = mpq_class;

// mpq_class's two-argument constructor does NOT canonicalize; use this
// helper whenever numerator and denominator may share a factor (or the
// denominator may be negative), otherwise comparisons misbehave.
inline Rational rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str()
                          : q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline BigReal to_bigreal(const Rational& q, Precision p) {
  BigReal r(p);
  mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

} // namespace stokesline::exactpoly

#endif
