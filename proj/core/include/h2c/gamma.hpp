#pragma once

#include <complex>

#include "h2c/errors.hpp"
#include "h2c/log_complex.hpp"

namespace h2c {

/// True if z is a pole of Gamma (nonpositive integer); the pole index is
/// written to n when given.
bool is_gamma_pole(Complex z, long* n = nullptr);

/// Complex log-gamma. Principal branch on Re(z) >= 1/2; for Re(z) < 1/2 the
/// reflection formula is used and the imaginary part may differ from the
/// continuous branch by a multiple of 2*pi (the value exp(log_gamma_raw) is
/// always correct). Throws PoleError at nonpositive integers.
Complex log_gamma_raw(Complex z);

/// Gamma(z) in log-magnitude/phase form; never overflows.
LogComplex log_gamma(Complex z);

/// Gamma(z) in linear arithmetic; throws OverflowError when unrepresentable.
Complex gamma_complex(Complex z);

/// 1/Gamma(z); exactly zero at the poles of Gamma.
Complex recip_gamma(Complex z);

/// 1/Gamma(z) as LogComplex; LogComplex::zero() at the poles.
LogComplex recip_gamma_log(Complex z);

/// Leading large-z form of Gamma(z+alpha)/Gamma(z+beta): z^(alpha-beta),
/// principal branch. Rejects z on the closed negative real axis.
Complex gamma_ratio_asym(Complex z, Complex alpha, Complex beta);

}  // namespace h2c
