#pragma once

#include <complex>

#include "h2c/errors.hpp"
#include "h2c/log_complex.hpp"
#include "h2c/options.hpp"

namespace h2c {

/// Ferrers function P^mu_nu(x) on -1 < x < 1, complex degree and order,
/// via the even/odd 2F1 split at argument x^2 with gamma prefactors.
/// Gamma poles in the denominators zero out the corresponding term.
/// Supported window: x^2 within the 2F1 Maclaurin cap (|x| <= ~0.866).
LogComplex legendre_p_interval_log(Complex mu, Complex nu, double x,
                                   const SpecfunOptions& opts = {});
Complex legendre_p_interval(Complex mu, Complex nu, double x,
                            const SpecfunOptions& opts = {});

/// Legendre function P^mu_nu(z) on z > 1.
/// Primary route: adaptive quadrature of the integral representation
///   P = sqrt(2/pi) Gamma(1/2-mu) / (Gamma(-nu-mu) Gamma(1+nu-mu))
///       (z^2-1)^{-mu/2} int_0^inf (z+cosh t)^{mu-1/2} cosh((nu+1/2)t) dt,
/// valid when Re(mu) - 1/2 + |Re(nu + 1/2)| < 0. Outside that region the
/// hypergeometric continuation path is used when z <= 2.5; otherwise the
/// violated condition is reported as a domain error.
LogComplex legendre_p_ray_log(Complex mu, Complex nu, double z,
                              const SpecfunOptions& opts = {});
Complex legendre_p_ray(Complex mu, Complex nu, double z,
                       const SpecfunOptions& opts = {});

/// Forced quadrature route (cross-check surface).
LogComplex legendre_p_ray_quad_log(Complex mu, Complex nu, double z,
                                   const SpecfunOptions& opts = {});
Complex legendre_p_ray_quad(Complex mu, Complex nu, double z,
                            const SpecfunOptions& opts = {});

/// Forced hypergeometric-continuation route (cross-check surface):
/// P^mu_nu(z) = ((z+1)/(z-1))^{mu/2} 2F1(nu+1, -nu; 1-mu; (1-z)/2) / Gamma(1-mu).
LogComplex legendre_p_ray_series_log(Complex mu, Complex nu, double z,
                                     const SpecfunOptions& opts = {});
Complex legendre_p_ray_series(Complex mu, Complex nu, double z,
                              const SpecfunOptions& opts = {});

/// True when the integral representation converges for (mu, nu).
bool legendre_ray_integral_convergent(Complex mu, Complex nu);

}  // namespace h2c
