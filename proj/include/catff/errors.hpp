#ifndef CATFF_ERRORS_HPP
#define CATFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace catff {

// Invalid mathematical input: division by zero, zero denominators,
// inadmissible exponent pairs, malformed text, mixed moduli.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A configured resource limit was exceeded (enumeration budget).
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal invariant failed. Always a defect, never an input error.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace catff

#endif
