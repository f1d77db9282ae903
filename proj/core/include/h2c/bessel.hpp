#pragma once

#include <complex>

#include "h2c/errors.hpp"
#include "h2c/log_complex.hpp"
#include "h2c/options.hpp"

namespace h2c {

/// J_order(x) by the ascending series, assembled in log form:
/// (x/2)^order / Gamma(order+1) * 0F1(order+1; -x^2/4).
LogComplex bessel_j_log(Complex order, double x, const SpecfunOptions& opts = {});

/// J_order(x) in linear arithmetic. For order = i*rho the magnitude grows
/// like e^{pi rho / 2}; past opts.bessel_rho_cap this throws OverflowError
/// directing the caller to bessel_j_scaled.
Complex bessel_j(Complex order, double x, const SpecfunOptions& opts = {});

/// e^{-pi rho/2} J_{i rho}(x); bounded for large rho.
Complex bessel_j_scaled(double rho, double x, const SpecfunOptions& opts = {});

/// Large p, z asymptotic of J_{ip}(z):
///   2 pi J_{ip}(z) ~ sqrt(2 pi) (p^2+z^2)^{-1/4}
///       exp(i sqrt(p^2+z^2) - i p asinh(p/z) - i pi/4) exp(p pi / 2).
Complex asym_bessel_j_imag(double p, double z);

/// The same asymptotic with the e^{p pi / 2} factor divided out.
Complex asym_bessel_j_imag_scaled(double p, double z);

}  // namespace h2c
