#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace diamag {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input violated a documented range or finiteness requirement.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// An integrand or antiderivative was asked to evaluate on a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

// A function was called outside the region where it is defined or accurate.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature could not reach the requested tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, std::complex<double> best_estimate,
                   double error_estimate, int subdivisions)
      : Error(message),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate),
        subdivisions_(subdivisions) {}

  std::complex<double> best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }
  int subdivisions() const noexcept { return subdivisions_; }

 private:
  std::complex<double> best_estimate_;
  double error_estimate_;
  int subdivisions_;
};

// Width extrapolation of a nascent-delta sequence did not behave.
class ExtrapolationError : public Error {
 public:
  using Error::Error;
};

}  // namespace diamag
