#include "h2c/gamma.hpp"

#include <cmath>

namespace h2c {

namespace {

// Godfrey's 15-coefficient Lanczos set, g = 607/128.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosC[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

const double kLog2Pi = std::log(2.0 * kPi);

// Principal log-gamma for Re(z) >= 1/2.
Complex lanczos_log_gamma(Complex z) {
  Complex zm1 = z - 1.0;
  Complex acc = kLanczosC[0];
  for (int k = 1; k < 15; ++k) acc += kLanczosC[k] / (zm1 + double(k));
  Complex t = zm1 + (kLanczosG + 0.5);
  return 0.5 * kLog2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(acc);
}

// log(sin(pi z)) with the exponentially large factor split off analytically,
// so it stays valid for |Im z| in the hundreds.
Complex log_sin_pi(Complex z) {
  const Complex ipz = Complex(0.0, kPi) * z;
  if (z.imag() > 0.0) {
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}), |e^{2 i pi z}| < 1
    return std::log(Complex(0.0, 0.5)) - ipz + std::log(1.0 - std::exp(2.0 * ipz));
  }
  // sin(pi z) = (-i/2) e^{i pi z} (1 - e^{-2 i pi z})
  return std::log(Complex(0.0, -0.5)) + ipz + std::log(1.0 - std::exp(-2.0 * ipz));
}

}  // namespace

bool is_gamma_pole(Complex z, long* n) {
  if (z.imag() != 0.0) return false;
  double r = z.real();
  if (r > 0.0) return false;
  if (r != std::floor(r)) return false;
  if (n) *n = static_cast<long>(r);
  return true;
}

Complex log_gamma_raw(Complex z) {
  long n = 0;
  if (is_gamma_pole(z, &n))
    throw PoleError("log_gamma: pole at nonpositive integer " + std::to_string(n), n);
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  return std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

LogComplex log_gamma(Complex z) {
  Complex lg = log_gamma_raw(z);
  return LogComplex::exp_of(lg);
}

Complex gamma_complex(Complex z) {
  auto v = log_gamma(z).to_complex_checked();
  if (!v) throw OverflowError("gamma_complex: magnitude unrepresentable; use log_gamma");
  return *v;
}

LogComplex recip_gamma_log(Complex z) {
  if (is_gamma_pole(z)) return LogComplex::zero();
  LogComplex g = log_gamma(z);
  return LogComplex::one() / g;
}

Complex recip_gamma(Complex z) {
  auto v = recip_gamma_log(z).to_complex_checked();
  if (!v) throw OverflowError("recip_gamma: magnitude unrepresentable");
  return *v;
}

Complex gamma_ratio_asym(Complex z, Complex alpha, Complex beta) {
  if (z == Complex(0.0, 0.0) || (z.imag() == 0.0 && z.real() < 0.0))
    throw DomainError("gamma_ratio_asym: z must avoid the negative real axis");
  return std::exp((alpha - beta) * std::log(z));
}

}  // namespace h2c
