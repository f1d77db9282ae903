#pragma once

#include "h2c/errors.hpp"
#include "h2c/log_complex.hpp"
#include "h2c/options.hpp"

namespace h2c {

/// K_{i rho}(x), real for real rho and x > 0, by adaptive Gauss-Kronrod
/// quadrature of the cosine-transform integral. When pi*rho/2 exceeds x the
/// contour is shifted to Im t = theta0 < pi/2 (the vertical segment is purely
/// imaginary and drops out), which removes the e^{-pi rho/2} smallness from
/// the oscillatory cancellation. Validity cap: rho <= opts.rho_quad_cap.
double macdonald_k(double rho, double x, const SpecfunOptions& opts = {});

/// e^{+pi rho/2} K_{i rho}(x).
double macdonald_k_scaled(double rho, double x, const SpecfunOptions& opts = {});

/// Independent route: K_{i rho}(x) = -pi Im(I_{i rho}(x)) / sinh(pi rho)
/// with I_{i rho} from its ascending series. Requires rho >= 0.05.
double macdonald_k_series(double rho, double x, const SpecfunOptions& opts = {});

/// Scaled series route, e^{+pi rho/2} K_{i rho}(x).
double macdonald_k_series_scaled(double rho, double x,
                                 const SpecfunOptions& opts = {});

/// Oscillatory-region asymptotic, valid for nu > x > x_min with both large:
///   K_{i nu}(x) ~ sqrt(2 pi) (nu^2-x^2)^{-1/4} e^{-pi nu/2}
///                 sin(pi/4 - sqrt(nu^2-x^2) + nu acosh(nu/x)).
double asym_macdonald_k(double nu, double x, const SpecfunOptions& opts = {});

/// The same without the e^{-pi nu/2} factor.
double asym_macdonald_k_scaled(double nu, double x, const SpecfunOptions& opts = {});

}  // namespace h2c
