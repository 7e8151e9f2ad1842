#include "lerch/exact.hpp"

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "lerch/errors.hpp"

namespace lerch::exact {

namespace {

// f_n = 1 / (beta + n) for n in [a, b].
std::vector<Rational> reciprocal_shifts(const Rational& beta, unsigned a, unsigned b) {
  std::vector<Rational> f;
  f.reserve(b - a + 1);
  for (unsigned n = a; n <= b; ++n) {
    Rational denom = beta + Rational(static_cast<long>(n));
    if (denom.is_zero()) {
      throw DivisionByZero("beta + " + std::to_string(n) + " vanishes in S_" + std::to_string(a) +
                           "^" + std::to_string(b));
    }
    f.push_back(Rational(1) / denom);
  }
  return f;
}

void check_spec(const MultiSumSpec& spec) {
  if (spec.a > spec.b) {
    throw InvalidArgument("multi_sum requires a <= b (got a=" + std::to_string(spec.a) +
                          ", b=" + std::to_string(spec.b) + ")");
  }
}

Rational factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

}  // namespace

LemmaParams::LemmaParams(unsigned q, unsigned s, Rational beta)
    : q_(q), s_(s), beta_(std::move(beta)) {
  if (s_ == 0) throw InvalidArgument("lemma order s must be >= 1");
  if (is_nonpositive_integer(beta_)) {
    throw InvalidShift("beta must avoid {0, -1, -2, ...}, got " + beta_.to_string());
  }
}

Rational pochhammer(const Rational& x, unsigned p) {
  Rational r(1);
  for (unsigned j = 0; j < p; ++j) r *= x + Rational(static_cast<long>(j));
  return r;
}

BigInt binomial(unsigned n, long k) {
  if (k < 0 || k > static_cast<long>(n)) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

bool is_nonpositive_integer(const Rational& x) { return x.is_integer() && x.sign() <= 0; }

Rational multi_sum(const MultiSumSpec& spec) {
  check_spec(spec);
  const auto f = reciprocal_shifts(spec.beta, spec.a, spec.b);

  // column[t] holds T(n, t) after processing index n.
  std::vector<Rational> column(spec.t + 1, Rational(0));
  column[0] = Rational(1);
  for (const auto& fn : f) {
    for (unsigned t = 1; t <= spec.t; ++t) column[t] += fn * column[t - 1];
  }
  return column[spec.t];
}

std::uint64_t tuple_count(unsigned a, unsigned b, unsigned t) {
  const BigInt count = binomial(b - a + t, t);
  if (!count.fits_ulong_p()) return std::numeric_limits<std::uint64_t>::max();
  return count.get_ui();
}

Rational multi_sum_bruteforce(const MultiSumSpec& spec, std::uint64_t cap) {
  check_spec(spec);
  const std::uint64_t count = tuple_count(spec.a, spec.b, spec.t);
  if (count > cap) {
    throw CapExceeded("enumeration of " + std::to_string(count) + " tuples exceeds cap " +
                          std::to_string(cap),
                      count);
  }
  const auto f = reciprocal_shifts(spec.beta, spec.a, spec.b);
  if (spec.t == 0) return Rational(1);

  // Odometer over offsets 0 <= k_1 <= ... <= k_t <= b - a.
  const unsigned top = spec.b - spec.a;
  std::vector<unsigned> idx(spec.t, 0);
  Rational total(0);
  while (true) {
    Rational term(1);
    for (unsigned k : idx) term *= f[k];
    total += term;

    int pos = static_cast<int>(spec.t) - 1;
    while (pos >= 0 && idx[pos] == top) --pos;
    if (pos < 0) break;
    const unsigned next = idx[pos] + 1;
    for (unsigned j = static_cast<unsigned>(pos); j < spec.t; ++j) idx[j] = next;
  }
  return total;
}

Rational lemma_lhs(const LemmaParams& params) {
  Rational total(0);
  for (unsigned m = 0; m <= params.q(); ++m) {
    Rational term = Rational(binomial(params.q(), m)) /
                    (params.beta() + Rational(static_cast<long>(m))).pow(params.s());
    if (m % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

Rational lemma_rhs(const LemmaParams& params) {
  const Rational prefactor = factorial(params.q()) / pochhammer(params.beta(), params.q() + 1);
  const Rational harmonic =
      multi_sum({.a = 0, .b = params.q(), .t = params.s() - 1, .beta = params.beta()});
  return prefactor * harmonic;
}

Rational coefficient_exact(unsigned p, const Rational& alpha, unsigned s) {
  if (p == 0) throw InvalidArgument("coefficient index p must be >= 1");
  if (s == 0) throw InvalidArgument("order s must be >= 1");
  if (alpha.is_integer() && alpha.sign() < 0) {
    throw InvalidShift("alpha must avoid {-1, -2, ...}, got " + alpha.to_string());
  }
  const Rational prefactor = factorial(p - 1) / pochhammer(alpha + Rational(1), p);
  const Rational harmonic = multi_sum({.a = 1, .b = p, .t = s - 1, .beta = alpha});
  return -(prefactor * harmonic);
}

Rational euler_inner_sum_exact(unsigned p, const Rational& alpha, unsigned s) {
  if (p == 0) throw InvalidArgument("coefficient index p must be >= 1");
  if (alpha.is_integer() && alpha.sign() < 0) {
    throw InvalidShift("alpha must avoid {-1, -2, ...}, got " + alpha.to_string());
  }
  Rational total(0);
  for (unsigned n = 1; n <= p; ++n) {
    Rational term = Rational(binomial(p - 1, n - 1)) / (alpha + Rational(static_cast<long>(n))).pow(s);
    if (n % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace lerch::exact
