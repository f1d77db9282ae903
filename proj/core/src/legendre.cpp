#include "h2c/legendre.hpp"

#include <algorithm>
#include <cmath>

#include "h2c/gamma.hpp"
#include "h2c/hypergeometric.hpp"
#include "h2c/quadrature.hpp"

namespace h2c {

namespace {

const double kSqrtPi = std::sqrt(kPi);

// Combine two exp-scaled terms t1 - t2 without overflow: both are given in
// log form and share whatever exponential scale dominates.
LogComplex log_difference(LogComplex t1, LogComplex t2) {
  if (t1.is_zero() && t2.is_zero()) return LogComplex::zero();
  double lmax = std::max(t1.is_zero() ? -1e308 : t1.log_mag,
                         t2.is_zero() ? -1e308 : t2.log_mag);
  Complex v1 = t1.is_zero() ? Complex(0, 0)
                            : LogComplex{t1.log_mag - lmax, t1.phase}.to_complex();
  Complex v2 = t2.is_zero() ? Complex(0, 0)
                            : LogComplex{t2.log_mag - lmax, t2.phase}.to_complex();
  LogComplex d = LogComplex::from(v1 - v2);
  d.log_mag += lmax;
  return d;
}

}  // namespace

LogComplex legendre_p_interval_log(Complex mu, Complex nu, double x,
                                   const SpecfunOptions& opts) {
  if (!(std::fabs(x) < 1.0))
    throw DomainError("legendre_p_interval: requires -1 < x < 1");
  const Complex x2(x * x, 0.0);

  // even/odd split: arguments of the four gamma factors
  const Complex p1 = 0.5 * (1.0 - mu - nu);       // Gamma((1-mu-nu)/2)
  const Complex p2 = 1.0 + 0.5 * (nu - mu);       // Gamma(1+(nu-mu)/2)
  const Complex q1 = 0.5 * (1.0 + nu - mu);       // Gamma((1+nu-mu)/2)
  const Complex q2 = -0.5 * (nu + mu);            // Gamma(-(nu+mu)/2)

  LogComplex t1 = recip_gamma_log(p1) * recip_gamma_log(p2);
  if (!t1.is_zero()) {
    SeriesReport f1 = hyp2f1(-0.5 * (mu + nu), 0.5 * (1.0 - mu + nu),
                             Complex(0.5, 0.0), x2, opts);
    t1 = t1 * LogComplex::from(f1.value);
  }

  LogComplex t2 = recip_gamma_log(q1) * recip_gamma_log(q2);
  if (x == 0.0) {
    t2 = LogComplex::zero();
  } else if (!t2.is_zero()) {
    SeriesReport f2 = hyp2f1(0.5 * (1.0 - mu - nu), 1.0 + 0.5 * (nu - mu),
                             Complex(1.5, 0.0), x2, opts);
    t2 = t2 * LogComplex::from(f2.value) * LogComplex::from_real(2.0 * x);
  }

  LogComplex bracket = log_difference(t1, t2);
  LogComplex pre = LogComplex::exp_of(mu * std::log(Complex(2.0, 0.0))) *
                   LogComplex::from_real(kSqrtPi) *
                   LogComplex::exp_of(-0.5 * mu * std::log(1.0 - x * x));
  return pre * bracket;
}

Complex legendre_p_interval(Complex mu, Complex nu, double x,
                            const SpecfunOptions& opts) {
  auto v = legendre_p_interval_log(mu, nu, x, opts).to_complex_checked();
  if (!v) throw OverflowError("legendre_p_interval: use the log form");
  return *v;
}

bool legendre_ray_integral_convergent(Complex mu, Complex nu) {
  return mu.real() - 0.5 + std::fabs(nu.real() + 0.5) < -1e-12;
}

LogComplex legendre_p_ray_quad_log(Complex mu, Complex nu, double z,
                                   const SpecfunOptions& opts) {
  if (!(z > 1.0)) throw DomainError("legendre_p_ray: requires z > 1");
  if (!legendre_ray_integral_convergent(mu, nu))
    throw DomainError(
        "legendre_p_ray_quad: integral diverges, needs Re(mu)-1/2+|Re(nu+1/2)| < 0");

  const Complex w = nu + 0.5;
  const double decay = 0.5 - mu.real() - std::fabs(w.real());
  const double t_max = std::min((-std::log(opts.quad_rel_tol) + 12.0) / decay, 400.0);

  // integrand (z+cosh t)^{mu-1/2} cosh(w t), written in exp form so large
  // |Im| parameters stay representable
  auto f = [&](double t) -> Complex {
    double ch = std::cosh(t);
    Complex l = (mu - 0.5) * std::log(z + ch);
    return 0.5 * (std::exp(l + w * t) + std::exp(l - w * t));
  };
  auto breaks = oscillation_mesh(
      [&](double t) {
        return std::fabs(mu.imag()) * std::sinh(t) / (z + std::cosh(t)) +
               std::fabs(w.imag());
      },
      0.0, t_max);
  QuadResult q = adaptive_gk(f, 0.0, t_max, opts, breaks);

  LogComplex pre = LogComplex::from_real(std::sqrt(2.0 / kPi));
  pre = pre * log_gamma(0.5 - mu) / (log_gamma(-nu - mu) * log_gamma(1.0 + nu - mu));
  pre = pre * LogComplex::exp_of(-0.5 * mu * std::log(z * z - 1.0));
  return pre * LogComplex::from(q.value);
}

LogComplex legendre_p_ray_series_log(Complex mu, Complex nu, double z,
                                     const SpecfunOptions& opts) {
  if (!(z > 1.0)) throw DomainError("legendre_p_ray: requires z > 1");
  const Complex arg(0.5 * (1.0 - z), 0.0);
  if (std::abs(arg) > opts.hyp2f1_z_cap)
    throw DomainError("legendre_p_ray_series: z outside the 2F1 window (z <= 2.5)");
  SeriesReport f = hyp2f1(nu + 1.0, -nu, 1.0 - mu, arg, opts);
  LogComplex pre =
      LogComplex::exp_of(0.5 * mu * (std::log(z + 1.0) - std::log(z - 1.0)));
  return pre * recip_gamma_log(1.0 - mu) * LogComplex::from(f.value);
}

LogComplex legendre_p_ray_log(Complex mu, Complex nu, double z,
                              const SpecfunOptions& opts) {
  if (!(z > 1.0)) throw DomainError("legendre_p_ray: requires z > 1");
  if (legendre_ray_integral_convergent(mu, nu))
    return legendre_p_ray_quad_log(mu, nu, z, opts);
  if (std::abs(0.5 * (1.0 - z)) <= opts.hyp2f1_z_cap && !is_gamma_pole(1.0 - mu))
    return legendre_p_ray_series_log(mu, nu, z, opts);
  throw DomainError(
      "legendre_p_ray: Re(mu)-1/2+|Re(nu+1/2)| >= 0 (integral diverges) and the "
      "continuation path needs z <= 2.5");
}

Complex legendre_p_ray(Complex mu, Complex nu, double z, const SpecfunOptions& opts) {
  auto v = legendre_p_ray_log(mu, nu, z, opts).to_complex_checked();
  if (!v) throw OverflowError("legendre_p_ray: use the log form");
  return *v;
}

Complex legendre_p_ray_quad(Complex mu, Complex nu, double z,
                            const SpecfunOptions& opts) {
  auto v = legendre_p_ray_quad_log(mu, nu, z, opts).to_complex_checked();
  if (!v) throw OverflowError("legendre_p_ray_quad: use the log form");
  return *v;
}

Complex legendre_p_ray_series(Complex mu, Complex nu, double z,
                              const SpecfunOptions& opts) {
  auto v = legendre_p_ray_series_log(mu, nu, z, opts).to_complex_checked();
  if (!v) throw OverflowError("legendre_p_ray_series: use the log form");
  return *v;
}

}  // namespace h2c
