#include "h2c/hypergeometric.hpp"

#include <algorithm>
#include <cmath>

#include "h2c/dd.hpp"
#include "h2c/gamma.hpp"

namespace h2c {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Shared Maclaurin summation for 0F1 / 1F1 / 2F1 (kind = numerator count).
// Terms are carried in complex double-double: several in-scope regimes
// (imaginary-order Bessel at large order/argument) cancel 10-20 digits
// between the largest term and the sum.
SeriesReport sum_hyp_series(int kind, Complex a, Complex b, Complex c, Complex z,
                            const SpecfunOptions& opts, const char* name) {
  long cn = 0;
  if (is_gamma_pole(c, &cn))
    throw PoleError(std::string(name) + ": lower parameter is a nonpositive integer", cn);
  if (!finite(a) || !finite(b) || !finite(c) || !finite(z))
    throw DomainError(std::string(name) + ": non-finite parameter");

  if (z == Complex(0.0, 0.0)) return {Complex(1.0, 0.0), 1, 0.0, true};

  detail::Cdd term{Complex(1.0, 0.0)};
  detail::Cdd sum = term;
  const double A = std::abs(a), B = std::abs(b), az = std::abs(z);
  int quiet = 0;

  auto ratio_bound = [&](double j) {
    double num = az;
    if (kind >= 1) num *= (A + j);
    if (kind >= 2) num *= (B + j);
    return num / (std::abs(c + j) * (j + 1.0));
  };

  for (int n = 0; n < opts.series_max_terms; ++n) {
    if (kind >= 1) term = detail::mul(term, detail::shift(a, n));
    if (kind >= 2) term = detail::mul(term, detail::shift(b, n));
    term = detail::mul(term, detail::Cdd(z));
    term = detail::div(term, detail::shift(c, n));
    term = detail::div(term, detail::Dd(double(n + 1)));
    sum = detail::add(sum, term);

    double at = detail::abs_estimate(term);
    double as = detail::abs_estimate(sum);
    quiet = (at <= 0.5 * opts.series_tol * std::max(as, 1e-300)) ? quiet + 1 : 0;
    if (quiet >= 2) {
      double m = double(n) + 1.0;  // ratio index leaving the last added term
      double q = std::max({ratio_bound(m), ratio_bound(m + 1.0), ratio_bound(2.0 * m)});
      if (kind == 2) q = std::max(q, az);
      if (q < 0.95) {
        double tail = at * ratio_bound(m) / (1.0 - q);
        if (tail <= opts.series_tol * std::max(as, 1e-300))
          return {sum.value(), n + 2, tail, true};
      }
    }
  }

  throw ConvergenceError(std::string(name) + ": series did not converge within term cap",
                         sum.value(), opts.series_max_terms,
                         detail::abs_estimate(term));
}

}  // namespace

SeriesReport hyp2f1(Complex a, Complex b, Complex c, Complex z,
                    const SpecfunOptions& opts) {
  if (std::abs(z) > opts.hyp2f1_z_cap)
    throw DomainError("hyp2f1: |z| exceeds the supported Maclaurin window");
  return sum_hyp_series(2, a, b, c, z, opts, "hyp2f1");
}

SeriesReport hyp1f1(Complex a, Complex c, Complex z, const SpecfunOptions& opts) {
  return sum_hyp_series(1, a, Complex(0.0, 0.0), c, z, opts, "hyp1f1");
}

SeriesReport hyp0f1(Complex c, Complex z, const SpecfunOptions& opts) {
  return sum_hyp_series(0, Complex(0.0, 0.0), Complex(0.0, 0.0), c, z, opts, "hyp0f1");
}

}  // namespace h2c
