#pragma once

#include <cmath>
#include <complex>

namespace h2c::detail {

// Double-double value: unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
// Just the operations the series kernels need; ~31 significant digits.
struct Dd {
  double hi = 0.0, lo = 0.0;
  constexpr Dd() = default;
  constexpr Dd(double h) : hi(h), lo(0.0) {}
  constexpr Dd(double h, double l) : hi(h), lo(l) {}
  double value() const { return hi + lo; }
};

inline Dd two_sum(double a, double b) {
  double s = a + b;
  double v = s - a;
  return {s, (a - (s - v)) + (b - v)};
}

inline Dd quick_two_sum(double a, double b) {  // |a| >= |b|
  double s = a + b;
  return {s, b - (s - a)};
}

inline Dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline Dd add(Dd a, Dd b) {
  Dd s = two_sum(a.hi, b.hi);
  Dd t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline Dd negate(Dd a) { return {-a.hi, -a.lo}; }

inline Dd sub(Dd a, Dd b) { return add(a, negate(b)); }

inline Dd mul(Dd a, Dd b) {
  Dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline Dd mul(Dd a, double b) {
  Dd p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline Dd div(Dd a, Dd b) {
  double q1 = a.hi / b.hi;
  Dd r = sub(a, mul(b, q1));
  double q2 = r.hi / b.hi;
  r = sub(r, mul(b, q2));
  double q3 = r.hi / b.hi;
  Dd q = quick_two_sum(q1, q2);
  return add(q, Dd(q3));
}

// Complex double-double.
struct Cdd {
  Dd re, im;
  Cdd() = default;
  Cdd(Dd r, Dd i) : re(r), im(i) {}
  Cdd(std::complex<double> z) : re(z.real()), im(z.imag()) {}
  std::complex<double> value() const { return {re.value(), im.value()}; }
};

inline Cdd add(Cdd a, Cdd b) { return {add(a.re, b.re), add(a.im, b.im)}; }

inline Cdd mul(Cdd a, Cdd b) {
  return {sub(mul(a.re, b.re), mul(a.im, b.im)),
          add(mul(a.re, b.im), mul(a.im, b.re))};
}

inline Cdd mul(Cdd a, double b) { return {mul(a.re, b), mul(a.im, b)}; }

inline Cdd div(Cdd a, Dd b) { return {div(a.re, b), div(a.im, b)}; }

inline Cdd div(Cdd a, Cdd b) {
  Dd n = add(mul(b.re, b.re), mul(b.im, b.im));
  Cdd t = mul(a, Cdd{b.re, negate(b.im)});
  return {div(t.re, n), div(t.im, n)};
}

inline double abs_estimate(const Cdd& z) { return std::hypot(z.re.hi, z.im.hi); }

// Exact double-double of (z + n) for integer-valued n.
inline Cdd shift(std::complex<double> z, double n) {
  return {two_sum(z.real(), n), Dd(z.imag())};
}

}  // namespace h2c::detail
