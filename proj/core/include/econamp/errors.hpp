#pragma once

#include <stdexcept>
#include <string>

namespace econamp {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (zero denominator, alpha outside (0, 1), non-positive temperature, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A device exponent exceeded the overflow cap.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// The operating-point solver failed to converge.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, double last_residual)
      : Error(what), last_residual_(last_residual) {}

  double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

}  // namespace econamp
