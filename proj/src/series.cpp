#include "lerch/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lerch/detail/double_double.hpp"
#include "lerch/errors.hpp"

namespace lerch::series {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();

Complex ipow(Complex base, unsigned exponent) {
  Complex r(1.0, 0.0);
  while (exponent != 0) {
    if (exponent & 1U) r *= base;
    base *= base;
    exponent >>= 1U;
  }
  return r;
}

void check_order(unsigned s) {
  if (s == 0) throw InvalidArgument("order s must be >= 1");
}

void check_tolerance(double tol) {
  if (std::isnan(tol)) throw InvalidArgument("tolerance is NaN");
  if (tol < kMinTolerance) {
    throw PrecisionError("tolerance " + std::to_string(tol) +
                         " is below the binary64 floor 1e-13");
  }
}

void check_max_terms(std::uint64_t max_terms) {
  if (max_terms == 0) throw InvalidArgument("max_terms must be >= 1");
}

// Allowance for accumulated rounding in a sum of `terms` values whose
// magnitudes add up to abs_sum, each carrying O(s) rounding steps.
double rounding_allowance(double abs_sum, std::uint64_t terms, unsigned s) {
  return 2.0 * kEps * static_cast<double>(terms + 2 * s + 8) * abs_sum;
}

// Geometric tail for the accelerated series: with head = B(P+1) r^(P+1),
// returns head / (1 - rho) where rho bounds r B(p+1)/B(p) for all p > P.
// For p >= P+1,  B(p+1)/B(p) = p/|alpha+p+1| * ((p+1)/p)^(s-1), and
// p/|alpha+p+1| <= p/(p+1+Re alpha), which is monotone in p with limit 1.
double geometric_tail(double head, double r, double re_alpha, unsigned s, double next) {
  if (head == 0.0) return 0.0;
  if (next + 1.0 + re_alpha <= 0.0) return kInf;
  const double first = std::max(1.0, next / (next + 1.0 + re_alpha));
  const double second = std::pow((next + 1.0) / next, static_cast<double>(s - 1));
  const double rho = r * first * second;
  if (rho >= 1.0) return kInf;
  return head / (1.0 - rho);
}

}  // namespace

void require_finite(Complex value, const char* what) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw InvalidArgument(std::string(what) + " must have finite components");
  }
}

double shift_gap(Complex alpha) {
  const double re = alpha.real();
  const double centre = std::max(1.0, std::round(-re));
  double best = kInf;
  for (double n : {centre - 1.0, centre, centre + 1.0}) {
    if (n < 1.0) continue;
    best = std::min(best, std::abs(alpha + n));
  }
  return best;
}

ShiftParam::ShiftParam(Complex alpha) : alpha_(alpha), gap_(0.0) {
  require_finite(alpha, "shift alpha");
  gap_ = shift_gap(alpha);
  if (gap_ <= kShiftTolerance) {
    throw InvalidShift("shift alpha = (" + std::to_string(alpha.real()) + ", " +
                       std::to_string(alpha.imag()) + ") is within 1e-12 of {-1, -2, ...}");
  }
}

Complex z_from_w(Complex w) { return w / (w - 1.0); }

Complex w_from_z(Complex z) { return -z / (1.0 - z); }

SeriesResult lerch_direct(Complex w, const ShiftParam& shift, unsigned s, double tol,
                          std::uint64_t max_terms) {
  require_finite(w, "w");
  check_order(s);
  check_tolerance(tol);
  check_max_terms(max_terms);
  const double radius = std::abs(w);
  if (radius >= 1.0) throw DomainError("direct series requires |w| < 1");

  const Complex alpha = shift.alpha();
  SeriesResult result;
  Complex sum(0.0, 0.0);
  Complex power(1.0, 0.0);
  double abs_sum = 0.0;
  double radius_power = 1.0;
  for (std::uint64_t n = 1; n <= max_terms; ++n) {
    const auto nd = static_cast<double>(n);
    power *= w;
    radius_power *= radius;
    const Complex term = power / ipow(alpha + nd, s);
    sum += term;
    abs_sum += std::abs(term);

    const double tail =
        radius_power * radius / ((1.0 - radius) * std::pow(shift_gap(alpha + nd), s));
    result.value = sum;
    result.terms_used = n;
    result.error_bound = tail + rounding_allowance(abs_sum, n, s);
    if (result.error_bound <= tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

Complex alternating_term(const ShiftParam& shift, unsigned s, std::uint64_t n) {
  const Complex term = 1.0 / ipow(shift.alpha() + static_cast<double>(n), s);
  return (n % 2 == 0) ? term : -term;
}

Complex alternating_direct(const ShiftParam& shift, unsigned s, std::uint64_t n_terms) {
  check_order(s);
  detail::DoubleDouble re;
  detail::DoubleDouble im;
  for (std::uint64_t n = 1; n <= n_terms; ++n) {
    const Complex term = alternating_term(shift, s, n);
    re += term.real();
    im += term.imag();
  }
  return {re.to_double(), im.to_double()};
}

CoefficientSequence::CoefficientSequence(const ShiftParam& shift, unsigned s)
    : alpha_(shift.alpha()), column_(s, Complex(0.0, 0.0)) {
  check_order(s);
  column_[0] = Complex(1.0, 0.0);
}

Complex CoefficientSequence::next() {
  ++p_;
  const auto pd = static_cast<double>(p_);
  const Complex fp = 1.0 / (alpha_ + pd);
  // (p-1)!/(alpha+1)_p, carried as a running ratio.
  ratio_ = (p_ == 1) ? fp : ratio_ * (pd - 1.0) * fp;
  for (std::size_t t = 1; t < column_.size(); ++t) column_[t] += fp * column_[t - 1];
  return -ratio_ * column_.back();
}

Complex coefficient_float(unsigned p, const ShiftParam& shift, unsigned s) {
  if (p == 0) throw InvalidArgument("coefficient index p must be >= 1");
  CoefficientSequence seq(shift, s);
  Complex c;
  for (unsigned k = 1; k <= p; ++k) c = seq.next();
  return c;
}

double coefficient_bound(unsigned p, const ShiftParam& shift, unsigned s) {
  if (p == 0) throw InvalidArgument("coefficient index p must be >= 1");
  check_order(s);
  const Complex alpha = shift.alpha();
  double ratio = 1.0 / std::abs(alpha + 1.0);
  for (unsigned k = 2; k <= p; ++k) {
    ratio *= static_cast<double>(k - 1) / std::abs(alpha + static_cast<double>(k));
  }
  return ratio * std::pow(static_cast<double>(p) / shift.gap(), static_cast<double>(s - 1));
}

double accelerated_tail_bound(double r, const ShiftParam& shift, unsigned s, unsigned terms) {
  check_order(s);
  if (r == 0.0) return 0.0;
  const double next = static_cast<double>(terms) + 1.0;
  const double head = coefficient_bound(terms + 1, shift, s) * std::pow(r, next);
  return geometric_tail(head, r, shift.alpha().real(), s, next);
}

SeriesResult lerch_accelerated_z(Complex z, const ShiftParam& shift, unsigned s, double tol,
                                 std::uint64_t max_terms) {
  require_finite(z, "z");
  check_order(s);
  check_tolerance(tol);
  check_max_terms(max_terms);
  const double r = std::abs(z);
  if (r >= 1.0) throw DomainError("accelerated series requires |z| < 1");

  const Complex alpha = shift.alpha();
  const double inv_gap_pow = std::pow(1.0 / shift.gap(), static_cast<double>(s - 1));
  const double re_alpha = alpha.real();

  CoefficientSequence seq(shift, s);
  SeriesResult result;
  Complex sum(0.0, 0.0);
  Complex zp(1.0, 0.0);
  double abs_sum = 0.0;
  double rp = 1.0;
  // Prefactor of the majorant, (p-1)!/(|alpha+1|...|alpha+p|), tracked
  // alongside the series so the tail bound costs O(1) per step.
  double bound_ratio = 0.0;
  for (std::uint64_t p = 1; p <= max_terms; ++p) {
    const auto pd = static_cast<double>(p);
    zp *= z;
    rp *= r;
    const Complex term = seq.next() * zp;
    sum += term;
    abs_sum += std::abs(term);

    const double next = pd + 1.0;
    bound_ratio = (p == 1) ? 1.0 / std::abs(alpha + 1.0) : bound_ratio * (pd - 1.0) / std::abs(alpha + pd);
    const double head = bound_ratio * pd / std::abs(alpha + next) *
                        std::pow(next, static_cast<double>(s - 1)) * inv_gap_pow * rp * r;
    const double tail = geometric_tail(head, r, re_alpha, s, next);
    result.value = sum;
    result.terms_used = p;
    result.error_bound = tail + rounding_allowance(abs_sum, p, s);
    if (result.error_bound <= tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

SeriesResult lerch_accelerated(Complex w, const ShiftParam& shift, unsigned s, double tol,
                               std::uint64_t max_terms) {
  require_finite(w, "w");
  if (!(w.real() < 0.5)) throw DomainError("accelerated series requires Re(w) < 1/2");
  return lerch_accelerated_z(z_from_w(w), shift, s, tol, max_terms);
}

Complex euler_inner_sum(unsigned p, const ShiftParam& shift, unsigned s) {
  using detail::ComplexDD;
  using detail::DoubleDouble;
  if (p == 0) throw InvalidArgument("coefficient index p must be >= 1");
  check_order(s);
  if (p > kEulerMaxTerms) {
    throw PrecisionError("Euler-transform inner sums are limited to p <= " +
                         std::to_string(kEulerMaxTerms));
  }
  const Complex alpha = shift.alpha();
  const unsigned top = p - 1;
  unsigned __int128 binom = 1;  // C(p-1, n-1)
  ComplexDD total{};
  for (unsigned n = 1; n <= p; ++n) {
    if (n > 1) binom = binom * (top - (n - 2)) / (n - 1);
    const ComplexDD base{detail::two_sum(alpha.real(), static_cast<double>(n)),
                         DoubleDouble(alpha.imag())};
    ComplexDD power{DoubleDouble(1.0), DoubleDouble(0.0)};
    for (unsigned k = 0; k < s; ++k) power = power * base;
    DoubleDouble weight = detail::from_uint128(binom);
    if (n % 2 == 1) weight = -weight;
    total = total + reciprocal(power) * weight;
  }
  return total.to_complex();
}

std::vector<Complex> euler_transform_partial_sums(Complex z, const ShiftParam& shift, unsigned s,
                                                  unsigned terms) {
  require_finite(z, "z");
  check_order(s);
  if (terms == 0) throw InvalidArgument("truncation index P must be >= 1");
  if (std::abs(z) >= 1.0) throw DomainError("Euler-transform form requires |z| < 1");
  if (terms > kEulerMaxTerms) {
    throw PrecisionError("Euler-transform form is limited to P <= " +
                         std::to_string(kEulerMaxTerms));
  }
  std::vector<Complex> partial;
  partial.reserve(terms);
  Complex sum(0.0, 0.0);
  Complex zp(1.0, 0.0);
  for (unsigned p = 1; p <= terms; ++p) {
    zp *= z;
    sum += zp * euler_inner_sum(p, shift, s);
    partial.push_back(sum);
  }
  return partial;
}

Complex euler_transform_eval(Complex z, const ShiftParam& shift, unsigned s, unsigned terms) {
  return euler_transform_partial_sums(z, shift, s, terms).back();
}

double ap_coefficient(unsigned p, unsigned s) {
  check_order(s);
  std::vector<double> column(s, 0.0);
  column[0] = 1.0;
  for (unsigned i = 1; i <= p; ++i) {
    const double fi = 1.0 / static_cast<double>(i);
    for (unsigned t = 1; t < s; ++t) column[t] += fi * column[t - 1];
  }
  return column[s - 1];
}

double zeta_tail_bound(unsigned s, unsigned terms) {
  if (s < 2) throw DomainError("zeta(s) requires s >= 2");
  const double k = static_cast<double>(s - 1);
  const double next = static_cast<double>(terms) + 1.0;
  // m(p) = (1+ln p)^(s-1) / (p 2^p);  m(p+1)/m(p) <= rho for p >= P+1.
  const double rho = 0.5 * std::pow((1.0 + std::log(next + 1.0)) / (1.0 + std::log(next)), k);
  if (rho >= 1.0) return kInf;
  const double head = std::pow(1.0 + std::log(next), k) / next * std::ldexp(1.0, -static_cast<int>(next));
  const double scale = 1.0 / (1.0 - std::ldexp(1.0, 1 - static_cast<int>(s)));
  return scale * head / (1.0 - rho);
}

SeriesResult zeta_accelerated(unsigned s, double tol, std::uint64_t max_terms) {
  if (s < 2) throw DomainError("zeta(s) requires s >= 2 (s = 1 is the pole)");
  check_tolerance(tol);
  check_max_terms(max_terms);
  const double scale = 1.0 / (1.0 - std::ldexp(1.0, 1 - static_cast<int>(s)));

  std::vector<double> column(s, 0.0);
  column[0] = 1.0;
  SeriesResult result;
  double sum = 0.0;
  for (std::uint64_t p = 1; p <= max_terms; ++p) {
    const auto pd = static_cast<double>(p);
    const double fp = 1.0 / pd;
    for (unsigned t = 1; t < s; ++t) column[t] += fp * column[t - 1];
    // 2^-p underflows long before the cap matters.
    const auto capped = static_cast<unsigned>(std::min<std::uint64_t>(p, 4000));
    sum += column[s - 1] / pd * std::ldexp(1.0, -static_cast<int>(capped));

    result.value = scale * sum;
    result.terms_used = p;
    const double tail = zeta_tail_bound(s, capped);
    result.error_bound = tail + rounding_allowance(std::abs(result.value.real()), p, s);
    if (result.error_bound <= tol) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace lerch::series
