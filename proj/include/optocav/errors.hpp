#pragma once

#include <stdexcept>
#include <string>

namespace optocav {

// Input outside the mathematical domain of an operation (negative time,
// nonpositive mass, regime violation that makes a formula undefined).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Caller did not satisfy a documented precondition (cutoff too small, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested route does not support this input, e.g. a Fourier-series
// phase distribution for a displaced mirror.
class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A series failed to converge or lost all significant digits.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace optocav
