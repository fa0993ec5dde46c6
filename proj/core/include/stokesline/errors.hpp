#ifndef STOKESLINE_ERRORS_HPP
#define STOKESLINE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stokesline {

// Precondition violated by the mathematical input (pole, empty domain, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A parameter combination for which the expansion degenerates (vanishing
// exponential part, integer theta, ...).  Callers can branch on this.
class DegenerateCaseError : public DomainError {
public:
  using DomainError::DomainError;
};

// The requested accuracy cannot be met with the given working precision.
class PrecisionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Wrong API usage (odd k where even required, missing diagnostic, ...).
class UsageError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// An internal exactness check failed (e.g. the -1/w residue is not -1).
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace stokesline

#endif
