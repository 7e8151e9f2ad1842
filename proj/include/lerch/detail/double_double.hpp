#pragma once

// Unevaluated sum of two binary64 values (about 106 significant bits) built
// from error-free transformations. Used where alternating binomial sums
// cancel by a factor of up to 2^(p-1); results are rounded back to binary64.

#include <cmath>
#include <complex>

namespace lerch::detail {

struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double h) : hi(h) {}  // NOLINT(google-explicit-constructor)
  constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

inline DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DoubleDouble operator+(const DoubleDouble& a, const DoubleDouble& b) {
  DoubleDouble s = two_sum(a.hi, b.hi);
  DoubleDouble t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble operator-(const DoubleDouble& a) { return {-a.hi, -a.lo}; }
inline DoubleDouble operator-(const DoubleDouble& a, const DoubleDouble& b) { return a + (-b); }

inline DoubleDouble operator*(const DoubleDouble& a, const DoubleDouble& b) {
  DoubleDouble p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator/(const DoubleDouble& a, const DoubleDouble& b) {
  const double q1 = a.hi / b.hi;
  DoubleDouble r = a - b * DoubleDouble(q1);
  const double q2 = r.hi / b.hi;
  r = r - b * DoubleDouble(q2);
  const double q3 = r.hi / b.hi;
  DoubleDouble q = quick_two_sum(q1, q2);
  return q + DoubleDouble(q3);
}

inline DoubleDouble& operator+=(DoubleDouble& a, const DoubleDouble& b) { return a = a + b; }

/// Exact conversion for |x| < 2^106.
inline DoubleDouble from_uint128(unsigned __int128 x) {
  const double hi = static_cast<double>(x);
  const auto hi_int = static_cast<unsigned __int128>(hi);
  const double lo = x >= hi_int ? static_cast<double>(x - hi_int)
                                : -static_cast<double>(hi_int - x);
  return quick_two_sum(hi, lo);
}

struct ComplexDD {
  DoubleDouble re;
  DoubleDouble im;

  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

inline ComplexDD operator+(const ComplexDD& a, const ComplexDD& b) {
  return {a.re + b.re, a.im + b.im};
}

inline ComplexDD operator*(const ComplexDD& a, const ComplexDD& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline ComplexDD operator*(const ComplexDD& a, const DoubleDouble& k) {
  return {a.re * k, a.im * k};
}

inline ComplexDD reciprocal(const ComplexDD& a) {
  const DoubleDouble norm = a.re * a.re + a.im * a.im;
  return {a.re / norm, -(a.im / norm)};
}

}  // namespace lerch::detail
