#pragma once

#include <stdexcept>
#include <string>

namespace avoid321 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad permutation word, out-of-range descent set, invalid path.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A size exceeded the configured enumeration bound.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Failures of exact arithmetic. These indicate a broken computation and
/// must never be swallowed.
class MathError : public Error {
 public:
  using Error::Error;
};

class ArithmeticOverflow : public MathError {
 public:
  using MathError::MathError;
};

class DivisibilityError : public MathError {
 public:
  using MathError::MathError;
};

/// Substitution that leaves the Laurent ring (0 into a negative power,
/// a non-unit constant into a negative power).
class DomainError : public MathError {
 public:
  using MathError::MathError;
};

/// A permutation that contains 321 was fed to a T_n-only operation.
class PatternViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace avoid321
