#pragma once

#include <stdexcept>
#include <string>

namespace kzeta {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Arguments are in-domain but the configuration is not supported
/// (e.g. cos/cos selector on an odd grid, resonant finite-part exponent).
class UnsupportedConfiguration : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a genuine pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Exact-arithmetic tables requested beyond their supported size.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// No closed form is tabulated for the requested arguments.
class NotAvailable : public Error {
 public:
  using Error::Error;
};

/// An iterative scheme stopped before meeting its target. Carries the
/// best value reached so callers can still report it.
class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, double best_estimate, double error_estimate)
      : Error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

}  // namespace kzeta
