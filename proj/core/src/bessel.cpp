#include "h2c/bessel.hpp"

#include <cmath>

#include "h2c/gamma.hpp"
#include "h2c/hypergeometric.hpp"

namespace h2c {

LogComplex bessel_j_log(Complex order, double x, const SpecfunOptions& opts) {
  if (x < 0.0 || !std::isfinite(x))
    throw DomainError("bessel_j: argument must be finite and nonnegative");
  if (x == 0.0) {
    if (order == Complex(0.0, 0.0)) return LogComplex::one();
    if (order.real() > 0.0) return LogComplex::zero();
    throw DomainError("bessel_j: x = 0 needs Re(order) >= 0");
  }
  SeriesReport s = hyp0f1(order + 1.0, Complex(-0.25 * x * x, 0.0), opts);
  LogComplex L = LogComplex::exp_of(order * std::log(0.5 * x));
  return L * recip_gamma_log(order + 1.0) * LogComplex::from(s.value);
}

Complex bessel_j(Complex order, double x, const SpecfunOptions& opts) {
  if (std::fabs(order.imag()) > opts.bessel_rho_cap)
    throw OverflowError("bessel_j: |Im order| beyond linear range, use bessel_j_scaled");
  auto v = bessel_j_log(order, x, opts).to_complex_checked();
  if (!v) throw OverflowError("bessel_j: magnitude unrepresentable, use bessel_j_scaled");
  return *v;
}

Complex bessel_j_scaled(double rho, double x, const SpecfunOptions& opts) {
  LogComplex L = bessel_j_log(Complex(0.0, rho), x, opts);
  L.log_mag -= 0.5 * kPi * rho;
  return L.to_complex();
}

Complex asym_bessel_j_imag_scaled(double p, double z) {
  if (!(p > 0.0) || !(z > 0.0))
    throw DomainError("asym_bessel_j_imag: requires p > 0 and z > 0");
  double r = std::hypot(p, z);
  double amp = std::sqrt(2.0 * kPi) / (2.0 * kPi * std::sqrt(std::sqrt(p * p + z * z)));
  double phase = r - p * std::asinh(p / z) - 0.25 * kPi;
  return amp * Complex(std::cos(phase), std::sin(phase));
}

Complex asym_bessel_j_imag(double p, double z) {
  Complex s = asym_bessel_j_imag_scaled(p, z);
  double f = std::exp(0.5 * kPi * p);
  if (!std::isfinite(f)) throw OverflowError("asym_bessel_j_imag: use the scaled variant");
  return s * f;
}

}  // namespace h2c
