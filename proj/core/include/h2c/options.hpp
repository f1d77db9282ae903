#pragma once

namespace h2c {

/// Evaluation context for the series and quadrature kernels.
/// Passed by value; all operations are pure and reentrant.
struct SpecfunOptions {
  double series_tol = 1e-12;    // relative tolerance for series tails
  int series_max_terms = 10000; // term cap per series
  double quad_rel_tol = 1e-12;
  double quad_abs_tol = 1e-280;
  int quad_max_intervals = 40000;
  double hyp2f1_z_cap = 0.75;   // Maclaurin window for 2F1
  double rho_quad_cap = 300.0;  // Macdonald quadrature validity cap
  double bessel_rho_cap = 400.0; // unscaled J_{i rho} overflows past this
  double asym_k_x_min = 5.0;    // K_{i nu} asymptotic needs nu > x > x_min
};

}  // namespace h2c
