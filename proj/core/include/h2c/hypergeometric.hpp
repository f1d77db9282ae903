#pragma once

#include <complex>

#include "h2c/errors.hpp"
#include "h2c/log_complex.hpp"
#include "h2c/options.hpp"

namespace h2c {

/// Result of a Maclaurin-series evaluation with a certified tail bound.
/// converged implies tail_bound <= tol * max(|value|, tiny).
struct SeriesReport {
  Complex value{0.0, 0.0};
  int terms_used = 0;
  double tail_bound = 0.0;  // absolute bound on the dropped tail
  bool converged = false;
};

/// Gauss hypergeometric 2F1(a,b;c;z) by raw Maclaurin series.
/// Supported window: |z| <= opts.hyp2f1_z_cap (default 0.75).
SeriesReport hyp2f1(Complex a, Complex b, Complex c, Complex z,
                    const SpecfunOptions& opts = {});

/// Confluent 1F1(a;c;z); entire in z.
SeriesReport hyp1f1(Complex a, Complex c, Complex z,
                    const SpecfunOptions& opts = {});

/// Limit 0F1(;c;z); entire in z.
SeriesReport hyp0f1(Complex c, Complex z, const SpecfunOptions& opts = {});

}  // namespace h2c
