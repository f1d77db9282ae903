#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace h2c {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rejected input: argument outside the documented domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

/// Evaluation at a pole of the gamma function (nonpositive integer argument).
struct PoleError : DomainError {
  long pole_index;
  PoleError(const std::string& msg, long n) : DomainError(msg), pole_index(n) {}
};

/// Result magnitude not representable in linear double arithmetic.
struct OverflowError : Error {
  using Error::Error;
};

/// Series or quadrature did not reach the requested tolerance within its cap.
struct ConvergenceError : Error {
  std::complex<double> partial_value;
  int terms_used;
  double tail_bound;
  ConvergenceError(const std::string& msg, std::complex<double> partial,
                   int terms, double tail)
      : Error(msg), partial_value(partial), terms_used(terms), tail_bound(tail) {}
};

}  // namespace h2c
