#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// under test except the Rational number carrier.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>

#include "lerch/rational.hpp"

namespace oracle {

using Complex = std::complex<double>;
using ComplexLD = std::complex<long double>;

inline constexpr double kLn2 = std::numbers::ln2;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kZeta2 = kPi * kPi / 6.0;
inline constexpr double kApery = 1.2020569031595942854;  // zeta(3)
inline constexpr double kZeta4 = kPi * kPi * kPi * kPi / 90.0;

/// Recursive enumeration of S_a^b(t) over nondecreasing tuples.
inline lerch::Rational tuple_sum(unsigned a, unsigned b, unsigned t, const lerch::Rational& beta) {
  if (t == 0) return lerch::Rational(1);
  lerch::Rational total(0);
  for (unsigned i = a; i <= b; ++i) {
    const lerch::Rational fi = lerch::Rational(1) / (beta + lerch::Rational(static_cast<long>(i)));
    total += fi * tuple_sum(i, b, t - 1, beta);
  }
  return total;
}

/// sum_{n=1}^{N} w^n/(alpha+n)^s in long double.
inline Complex direct_sum(Complex w, Complex alpha, unsigned s, std::uint64_t terms) {
  ComplexLD sum(0, 0);
  ComplexLD power(1, 0);
  const ComplexLD wl(w.real(), w.imag());
  const ComplexLD al(alpha.real(), alpha.imag());
  for (std::uint64_t n = 1; n <= terms; ++n) {
    power *= wl;
    ComplexLD denom(1, 0);
    for (unsigned k = 0; k < s; ++k) denom *= al + static_cast<long double>(n);
    sum += power / denom;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

/// zeta(s) by N direct terms plus an Euler-Maclaurin tail.
inline double zeta_direct(unsigned s, std::uint64_t terms = 100000) {
  long double sum = 0;
  for (std::uint64_t n = terms; n >= 1; --n) sum += std::pow(static_cast<long double>(n), -static_cast<long double>(s));
  const long double N = static_cast<long double>(terms);
  const long double sl = s;
  sum += std::pow(N, 1 - sl) / (sl - 1) - std::pow(N, -sl) / 2 + sl * std::pow(N, -sl - 1) / 12;
  return static_cast<double>(sum);
}

/// Li_2(1/2) = pi^2/12 - (ln 2)^2 / 2.
inline double dilog_half() { return kPi * kPi / 12.0 - kLn2 * kLn2 / 2.0; }

inline std::mt19937_64 seeded_rng(std::uint64_t seed = 20261016) { return std::mt19937_64(seed); }

}  // namespace oracle
