#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vekua {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation
/// (negative Bessel order, non-finite coordinates, NaN matrix entries).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent or invalid configuration, e.g. a Helmholtz basis without a
/// wavenumber.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Fitting was requested with no observations.
class EmptyDataError : public Error {
 public:
  using Error::Error;
};

/// An iterative numerical kernel failed to converge.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, std::size_t iterations)
      : Error(what), iterations_(iterations) {}

  std::size_t iterations() const noexcept { return iterations_; }

 private:
  std::size_t iterations_;
};

/// Gradient training produced a non-finite loss.
class TrainingError : public Error {
 public:
  TrainingError(const std::string& what, std::size_t step)
      : Error(what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace vekua
