#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "umbra/series.hpp"

namespace umbra {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A Gamma function (or a Gamma factor of a moment sequence) was asked for
/// its value at a pole.
class PoleError : public Error {
public:
  PoleError(const std::string& what, std::complex<double> location,
            int factor_index = -1)
      : Error(what), location_(location), factor_index_(factor_index) {}

  std::complex<double> location() const noexcept { return location_; }
  /// Index of the offending Gamma factor, or -1 when not applicable.
  int factor_index() const noexcept { return factor_index_; }

private:
  std::complex<double> location_;
  int factor_index_;
};

/// A series hit its term cap (or failed its ratio test) before converging.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& what, SeriesTail tail,
                   std::complex<double> partial_sum)
      : Error(what), tail_(tail), partial_(partial_sum) {}

  const SeriesTail& tail() const noexcept { return tail_; }
  std::complex<double> partial_sum() const noexcept { return partial_; }

private:
  SeriesTail tail_;
  std::complex<double> partial_;
};

/// Argument outside the documented domain (includes convergence-strip
/// violations for Mellin evaluations).
class DomainError : public Error {
public:
  using Error::Error;
};

}  // namespace umbra
