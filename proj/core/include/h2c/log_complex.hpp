#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>

namespace h2c {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Reduce an angle to (-pi, pi].
inline double reduce_phase(double phi) {
  double r = std::remainder(phi, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

/// A nonzero complex value stored as exp(log_mag) * exp(i*phase).
/// Multiplication and division never overflow; log_mag = -inf encodes zero.
struct LogComplex {
  double log_mag = 0.0;  // natural log of the magnitude
  double phase = 0.0;    // radians, reduced to (-pi, pi]

  static LogComplex one() { return {0.0, 0.0}; }

  static LogComplex zero() {
    return {-std::numeric_limits<double>::infinity(), 0.0};
  }

  static LogComplex from_polar(double lm, double ph) {
    return {lm, reduce_phase(ph)};
  }

  static LogComplex from(Complex z) {
    if (z == Complex(0.0, 0.0)) return zero();
    return {std::log(std::abs(z)), std::arg(z)};
  }

  static LogComplex from_real(double x) {
    if (x == 0.0) return zero();
    return {std::log(std::fabs(x)), x > 0 ? 0.0 : kPi};
  }

  /// exp(w) for complex w, without materializing the magnitude.
  static LogComplex exp_of(Complex w) { return {w.real(), reduce_phase(w.imag())}; }

  bool is_zero() const { return std::isinf(log_mag) && log_mag < 0; }

  Complex to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    double m = std::exp(log_mag);
    return {m * std::cos(phase), m * std::sin(phase)};
  }

  /// Linear value when representable in double, nullopt otherwise.
  std::optional<Complex> to_complex_checked(double max_log = 700.0) const {
    if (is_zero()) return Complex{0.0, 0.0};
    if (std::fabs(log_mag) > max_log) return std::nullopt;
    return to_complex();
  }

  LogComplex conj() const { return {log_mag, reduce_phase(-phase)}; }

  /// Principal power with real exponent: exp(a * Log z).
  LogComplex pow_real(double a) const {
    if (is_zero()) return zero();
    return {a * log_mag, reduce_phase(a * phase)};
  }

  friend LogComplex operator*(LogComplex a, LogComplex b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return {a.log_mag + b.log_mag, reduce_phase(a.phase + b.phase)};
  }
  friend LogComplex operator/(LogComplex a, LogComplex b) {
    if (a.is_zero()) return zero();
    return {a.log_mag - b.log_mag, reduce_phase(a.phase - b.phase)};
  }
  LogComplex& operator*=(LogComplex b) { return *this = *this * b; }
  LogComplex& operator/=(LogComplex b) { return *this = *this / b; }
};

}  // namespace h2c
