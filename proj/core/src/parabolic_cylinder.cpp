#include "h2c/parabolic_cylinder.hpp"

#include <cmath>

#include "h2c/gamma.hpp"
#include "h2c/hypergeometric.hpp"

namespace h2c {

Complex pcf_d(Complex nu, Complex z, const SpecfunOptions& opts) {
  const Complex z2_half = 0.5 * z * z;

  Complex even = recip_gamma(0.5 * (1.0 - nu));
  if (even != Complex(0.0, 0.0))
    even *= hyp1f1(-0.5 * nu, Complex(0.5, 0.0), z2_half, opts).value;

  Complex odd = recip_gamma(-0.5 * nu);
  if (odd != Complex(0.0, 0.0))
    odd *= z * std::sqrt(2.0) * hyp1f1(0.5 * (1.0 - nu), Complex(1.5, 0.0), z2_half, opts).value;

  Complex pre = std::exp(0.5 * nu * std::log(2.0) - 0.25 * z * z) * std::sqrt(kPi);
  return pre * (even - odd);
}

}  // namespace h2c
