#include "h2c/macdonald.hpp"

#include <algorithm>
#include <cmath>

#include "h2c/gamma.hpp"
#include "h2c/hypergeometric.hpp"
#include "h2c/quadrature.hpp"

namespace h2c {

namespace {

// Scaled integral on the contour Im t = theta0:
//   e^{s} K_{i rho}(x) = e^{s - rho theta0} *
//       int_0^inf e^{-x cos(theta0) cosh t} cos(rho t - x sin(theta0) sinh t) dt
// with s = 0 (unscaled) or pi rho / 2.
double macdonald_quad_impl(double rho, double x, bool scaled,
                           const SpecfunOptions& opts) {
  if (!(x > 0.0)) throw DomainError("macdonald_k: requires x > 0");
  rho = std::fabs(rho);  // K_{i rho} = K_{-i rho}
  if (rho > opts.rho_quad_cap)
    throw DomainError("macdonald_k: rho beyond quadrature cap, use asym_macdonald_k");

  double theta0 = 0.0;
  if (rho > 0.0 && 0.5 * kPi * rho > x + 6.0)
    theta0 = std::max(0.0, 0.5 * kPi - 2.0 / rho);
  const double c0 = std::cos(theta0), s0 = std::sin(theta0);

  const double decay = x * c0;
  const double t_max = std::acosh(1.0 + 45.0 / decay);

  auto breaks = oscillation_mesh(
      [&](double t) { return rho - x * s0 * std::cosh(t); }, 0.0, t_max);

  auto f = [&](double t) -> Complex {
    double env = std::exp(-decay * std::cosh(t));
    return {env * std::cos(rho * t - x * s0 * std::sinh(t)), 0.0};
  };
  QuadResult q = adaptive_gk(f, 0.0, t_max, opts, breaks);

  double expo = -rho * theta0 + (scaled ? 0.5 * kPi * rho : 0.0);
  return std::exp(expo) * q.value.real();
}

// log(sinh(pi rho)) for rho > 0, accurate and overflow-free.
double log_sinh_pi(double rho) {
  double a = kPi * rho;
  if (a > 0.5) return a + std::log1p(-std::exp(-2.0 * a)) - std::log(2.0);
  return std::log(std::sinh(a));
}

}  // namespace

double macdonald_k(double rho, double x, const SpecfunOptions& opts) {
  return macdonald_quad_impl(rho, x, false, opts);
}

double macdonald_k_scaled(double rho, double x, const SpecfunOptions& opts) {
  return macdonald_quad_impl(rho, x, true, opts);
}

namespace {

double macdonald_series_impl(double rho, double x, bool scaled,
                             const SpecfunOptions& opts) {
  if (!(x > 0.0)) throw DomainError("macdonald_k_series: requires x > 0");
  rho = std::fabs(rho);
  if (rho < 0.05)
    throw DomainError("macdonald_k_series: route degenerates as rho -> 0, use macdonald_k");

  // I_{i rho}(x) = (x/2)^{i rho} / Gamma(1 + i rho) * 0F1(1 + i rho; x^2/4)
  const Complex c(1.0, rho);
  SeriesReport s = hyp0f1(c, Complex(0.25 * x * x, 0.0), opts);
  LogComplex I = LogComplex::exp_of(Complex(0.0, rho * std::log(0.5 * x)));
  I = I * recip_gamma_log(c) * LogComplex::from(s.value);

  // K = -pi Im(I) / sinh(pi rho), assembled in log magnitude.
  double sin_phase = std::sin(I.phase);
  if (sin_phase == 0.0) return 0.0;
  double log_abs = std::log(kPi) + I.log_mag + std::log(std::fabs(sin_phase)) -
                   log_sinh_pi(rho) + (scaled ? 0.5 * kPi * rho : 0.0);
  return -std::copysign(std::exp(log_abs), sin_phase);
}

}  // namespace

double macdonald_k_series(double rho, double x, const SpecfunOptions& opts) {
  return macdonald_series_impl(rho, x, false, opts);
}

double macdonald_k_series_scaled(double rho, double x, const SpecfunOptions& opts) {
  return macdonald_series_impl(rho, x, true, opts);
}

double asym_macdonald_k_scaled(double nu, double x, const SpecfunOptions& opts) {
  if (!(nu > x) || !(x > opts.asym_k_x_min))
    throw DomainError("asym_macdonald_k: requires nu > x > x_min");
  double d = nu * nu - x * x;
  double amp = std::sqrt(2.0 * kPi) / std::sqrt(std::sqrt(d));
  double phase = 0.25 * kPi - std::sqrt(d) + nu * std::acosh(nu / x);
  return amp * std::sin(phase);
}

double asym_macdonald_k(double nu, double x, const SpecfunOptions& opts) {
  return std::exp(-0.5 * kPi * nu) * asym_macdonald_k_scaled(nu, x, opts);
}

}  // namespace h2c
