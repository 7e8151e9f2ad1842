#pragma once

// Exact-rational kernel for the multiple harmonic power series: Pochhammer
// symbols, binomials, the nondecreasing-tuple sums S_a^b(t), both sides of the
// alternating binomial lemma, and the exact series coefficients.

#include <cstdint>

#include "lerch/rational.hpp"

namespace lerch::exact {

/// Parameters of the alternating binomial identity
///   L(q, beta) = sum_{m=0}^{q} C(q, m) (-1)^m / (beta + m)^s.
/// beta must not be a nonpositive integer (InvalidShift otherwise).
class LemmaParams {
 public:
  LemmaParams(unsigned q, unsigned s, Rational beta);

  unsigned q() const { return q_; }
  unsigned s() const { return s_; }
  const Rational& beta() const { return beta_; }

 private:
  unsigned q_;
  unsigned s_;
  Rational beta_;
};

/// S_a^b(t) = sum over a <= i_1 <= ... <= i_t <= b of prod f_{i_r},
/// with f_n = 1 / (beta + n).
struct MultiSumSpec {
  unsigned a = 0;
  unsigned b = 0;
  unsigned t = 0;
  Rational beta{1};
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Rising product x (x+1) ... (x+p-1); p == 0 gives 1.
Rational pochhammer(const Rational& x, unsigned p);

/// C(n, k), zero outside 0 <= k <= n.
BigInt binomial(unsigned n, long k);

/// True when x is one of 0, -1, -2, ...
bool is_nonpositive_integer(const Rational& x);

/// Exact S_a^b(t) via the triangular recurrence
///   T(n, t) = T(n-1, t) + f_n T(n, t-1),  T(., 0) = 1,
/// costing O((b-a+1) t) rational operations. Throws InvalidArgument when
/// a > b and DivisionByZero when some beta + n vanishes on [a, b].
Rational multi_sum(const MultiSumSpec& spec);

/// Number of nondecreasing t-tuples drawn from [a, b], i.e. C(b-a+t, t),
/// saturated at UINT64_MAX.
std::uint64_t tuple_count(unsigned a, unsigned b, unsigned t);

/// Same value as multi_sum, by explicit enumeration of every nondecreasing
/// tuple. Used only as an independent oracle. Throws CapExceeded when more
/// than `cap` tuples would be enumerated.
Rational multi_sum_bruteforce(const MultiSumSpec& spec,
                              std::uint64_t cap = kDefaultEnumerationCap);

/// Left side L(q, beta): the alternating binomial sum.
Rational lemma_lhs(const LemmaParams& params);

/// Right side R(q, beta) = q! / (beta)_{q+1} * S_0^q(s-1).
Rational lemma_rhs(const LemmaParams& params);

/// Exact coefficient of z^p in
///   Li_s^alpha(-z/(1-z)) = sum_p c_p z^p,
///   c_p = -(p-1)!/(alpha+1)_p * sum_{1<=i_1<=...<=i_{s-1}<=p} prod 1/(alpha+i_r).
/// Throws InvalidShift for alpha in {-1, -2, ...} and InvalidArgument for
/// p == 0 or s == 0.
Rational coefficient_exact(unsigned p, const Rational& alpha, unsigned s);

/// Inner sum of the exchanged double series,
///   sum_{n=1}^{p} C(p-1, n-1) (-1)^n / (alpha+n)^s,
/// evaluated term by term. Equals coefficient_exact(p, alpha, s).
Rational euler_inner_sum_exact(unsigned p, const Rational& alpha, unsigned s);

}  // namespace lerch::exact
