#pragma once

#include <stdexcept>
#include <string>

namespace reinhardt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the evaluation domain (negative radii, bad parameters).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The defining-function gradient vanishes (or is below grad_tol) at the point.
class DegenerateGradientError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class NonTangentError : public Error {
 public:
  using Error::Error;
};

class EmptySurfaceError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace reinhardt
