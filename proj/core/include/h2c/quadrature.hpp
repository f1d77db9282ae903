#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <queue>
#include <vector>

#include "h2c/errors.hpp"
#include "h2c/log_complex.hpp"
#include "h2c/options.hpp"

namespace h2c {

struct QuadResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;
  int evaluations = 0;
  bool converged = false;
};

namespace detail {

// Gauss-Kronrod 15(7) nodes and weights on [-1, 1] (QUADPACK dqk15).
inline constexpr double kGk15Nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kGk15WK[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kG7W[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
inline void gk15_panel(F&& f, double a, double b, Complex& kronrod,
                       double& err) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  Complex fc = f(c);
  Complex resk = kGk15WK[7] * fc;
  Complex resg = kG7W[3] * fc;
  for (int j = 0; j < 7; ++j) {
    double x = h * kGk15Nodes[j];
    Complex f1 = f(c - x);
    Complex f2 = f(c + x);
    resk += kGk15WK[j] * (f1 + f2);
    if (j % 2 == 1) resg += kG7W[j / 2] * (f1 + f2);
  }
  kronrod = resk * h;
  err = std::abs((resk - resg) * h);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod 15(7) over [a, b]. `breaks` seeds the initial
/// subdivision (useful for oscillatory integrands); the worst panel is split
/// until the summed error estimate meets max(abs_tol, rel_tol * |I|).
template <class F>
QuadResult adaptive_gk(F&& f, double a, double b, const SpecfunOptions& opts = {},
                       const std::vector<double>& breaks = {}) {
  struct Panel {
    double err;
    double a, b;
    Complex val;
    bool operator<(const Panel& o) const { return err < o.err; }
  };

  std::priority_queue<Panel> heap;
  Complex total{0.0, 0.0};
  double total_err = 0.0;
  int evals = 0;

  auto push_panel = [&](double pa, double pb) {
    Complex v;
    double e;
    detail::gk15_panel(f, pa, pb, v, e);
    evals += 15;
    total += v;
    total_err += e;
    heap.push({e, pa, pb, v});
  };

  if (breaks.size() >= 2) {
    for (size_t i = 0; i + 1 < breaks.size(); ++i)
      push_panel(breaks[i], breaks[i + 1]);
  } else {
    push_panel(a, b);
  }

  int max_panels = opts.quad_max_intervals;
  while (static_cast<int>(heap.size()) < max_panels) {
    double tol = std::max(opts.quad_abs_tol, opts.quad_rel_tol * std::abs(total));
    if (total_err <= tol) break;
    Panel worst = heap.top();
    if (worst.err <= tol / std::max<size_t>(heap.size(), 1)) break;
    heap.pop();
    total -= worst.val;
    total_err -= worst.err;
    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // panel at rounding limit
      total += worst.val;
      total_err += worst.err;
      break;
    }
    push_panel(worst.a, mid);
    push_panel(mid, worst.b);
  }

  double tol = std::max(opts.quad_abs_tol, opts.quad_rel_tol * std::abs(total));
  return {total, total_err, evals, total_err <= tol * 1.001};
}

/// Breakpoints over [a, b] sized so each panel spans at most ~max_phase
/// radians of the oscillation described by phase_rate(t) = |d phase/dt|.
template <class PhaseRate>
std::vector<double> oscillation_mesh(PhaseRate&& phase_rate, double a, double b,
                                     double max_phase = 1.5,
                                     double max_step = 0.5,
                                     int max_points = 60000) {
  std::vector<double> pts{a};
  double t = a;
  while (t < b && static_cast<int>(pts.size()) < max_points) {
    double rate = std::fabs(phase_rate(t)) + max_phase / max_step;
    double step = max_phase / rate;
    t = std::min(b, t + step);
    pts.push_back(t);
  }
  if (pts.back() != b) pts.push_back(b);
  return pts;
}

}  // namespace h2c
