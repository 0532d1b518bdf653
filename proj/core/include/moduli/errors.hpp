#pragma once

#include <stdexcept>
#include <string>

namespace moduli {

// A mathematical precondition failed: a pole, a non-invertible element,
// a parameter outside the domain of a family.
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two operands live in incompatible coefficient contexts (different square
// classes in a quadratic extension, different cyclotomic moduli, different
// variable counts).
class ContextError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace moduli
