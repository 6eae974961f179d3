#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace haarhankel {

/// Argument outside the documented domain of a numerical routine (NaN,
/// negative radius, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid parameters handed to a library call (unsorted grid, h <= 0, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested resolution exceeds what the coefficient table can index.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Quadrature did not reach its tolerance within the allotted budget.
/// Carries the interval and the best estimate available when it gave up.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double lo, double hi,
                   double estimate, double error_bound)
      : std::runtime_error(what),
        lo_(lo),
        hi_(hi),
        estimate_(estimate),
        error_bound_(error_bound) {}

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double lo_;
  double hi_;
  double estimate_;
  double error_bound_;
};

/// Malformed external data (sample files, coefficient tables).
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  /// 1-based line number, 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace haarhankel
