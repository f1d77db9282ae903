#pragma once

#include <complex>

#include "h2c/log_complex.hpp"
#include "h2c/options.hpp"

namespace h2c {

/// Parabolic cylinder function, entire in both arguments:
///   D_nu(z) = 2^{nu/2} sqrt(pi) e^{-z^2/4} [ 1F1(-nu/2; 1/2; z^2/2)/Gamma((1-nu)/2)
///             - z sqrt(2) 1F1((1-nu)/2; 3/2; z^2/2)/Gamma(-nu/2) ].
/// Gamma poles zero out the corresponding term.
Complex pcf_d(Complex nu, Complex z, const SpecfunOptions& opts = {});

}  // namespace h2c
