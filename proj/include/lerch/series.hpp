#pragma once

// Binary64 evaluation of the shifted polylogarithm (Lerch function)
//   Li_s^alpha(w) = sum_{n>=1} w^n / (alpha + n)^s
// on the half-plane Re(w) < 1/2 through the accelerated power series in
// z = w / (w - 1), together with the slow baselines it is checked against.

#include <complex>
#include <cstdint>
#include <vector>

namespace lerch::series {

using Complex = std::complex<double>;

/// Shifts closer than this to {-1, -2, ...} are rejected.
inline constexpr double kShiftTolerance = 1e-12;
/// Smallest tolerance the binary64 evaluators will certify.
inline constexpr double kMinTolerance = 1e-13;
/// Largest truncation index for the Euler-transform form. Beyond it the
/// binomial weights no longer fit the compensated accumulator exactly.
inline constexpr unsigned kEulerMaxTerms = 100;

/// Throws InvalidArgument naming `what` if either component is NaN or Inf.
void require_finite(Complex value, const char* what);

/// C(alpha) = min_{n>=1} |alpha + n|. Zero at forbidden shifts.
double shift_gap(Complex alpha);

/// Validated shift alpha with its cached gap C(alpha).
class ShiftParam {
 public:
  explicit ShiftParam(Complex alpha);

  Complex alpha() const { return alpha_; }
  double gap() const { return gap_; }

 private:
  Complex alpha_;
  double gap_;
};

struct SeriesResult {
  Complex value;
  std::uint64_t terms_used = 0;
  double error_bound = 0.0;
  bool converged = false;
};

/// z = w / (w - 1); maps Re(w) < 1/2 onto the unit disk.
Complex z_from_w(Complex w);
/// w = -z / (1 - z); inverse of z_from_w.
Complex w_from_z(Complex z);

/// Partial sums of the defining series for |w| < 1. Stops once the
/// geometric tail |w|^(N+1) / ((1-|w|) min_{n>N}|alpha+n|^s), plus a
/// rounding allowance, drops below tol.
SeriesResult lerch_direct(Complex w, const ShiftParam& shift, unsigned s, double tol,
                          std::uint64_t max_terms);

/// (-1)^n / (alpha + n)^s.
Complex alternating_term(const ShiftParam& shift, unsigned s, std::uint64_t n);

/// sum_{n=1}^{N} (-1)^n / (alpha + n)^s, i.e. Li_s^alpha at the boundary
/// point w = -1, summed with a compensated accumulator.
Complex alternating_direct(const ShiftParam& shift, unsigned s, std::uint64_t n_terms);

/// Streams c_1, c_2, ... of the accelerated series. Each step extends the
/// tuple-sum table by one index and updates the prefactor ratio
/// (p-1)!/(alpha+1)_p multiplicatively, so neither factor is formed alone.
class CoefficientSequence {
 public:
  CoefficientSequence(const ShiftParam& shift, unsigned s);

  /// Returns c_p for the next p (starting at 1).
  Complex next();
  unsigned index() const { return p_; }

 private:
  Complex alpha_;
  unsigned p_ = 0;
  Complex ratio_;
  std::vector<Complex> column_;
};

/// c_p in binary64.
Complex coefficient_float(unsigned p, const ShiftParam& shift, unsigned s);

/// Majorant (p-1)!/(|alpha+1|...|alpha+p|) * p^(s-1) / C(alpha)^(s-1) of |c_p|.
double coefficient_bound(unsigned p, const ShiftParam& shift, unsigned s);

/// Bound on sum_{p>P} |c_p| r^p derived from coefficient_bound. Returns
/// +inf when the majorant's ratio test does not yet certify a geometric
/// tail at P.
double accelerated_tail_bound(double r, const ShiftParam& shift, unsigned s, unsigned terms);

/// Li_s^alpha(w) for Re(w) < 1/2 via sum c_p z^p, z = w/(w-1).
SeriesResult lerch_accelerated(Complex w, const ShiftParam& shift, unsigned s, double tol,
                               std::uint64_t max_terms);

/// Same series, parameterized directly by z with |z| < 1.
SeriesResult lerch_accelerated_z(Complex z, const ShiftParam& shift, unsigned s, double tol,
                                 std::uint64_t max_terms);

/// sum_{n=1}^{p} C(p-1, n-1) (-1)^n / (alpha+n)^s, evaluated directly in
/// compensated arithmetic. Independent of CoefficientSequence; equals c_p.
Complex euler_inner_sum(unsigned p, const ShiftParam& shift, unsigned s);

/// sum_{p=1}^{P} z^p * euler_inner_sum(p). Requires |z| < 1 and
/// P <= kEulerMaxTerms.
Complex euler_transform_eval(Complex z, const ShiftParam& shift, unsigned s, unsigned terms);

/// All partial sums of euler_transform_eval for P = 1..terms.
std::vector<Complex> euler_transform_partial_sums(Complex z, const ShiftParam& shift, unsigned s,
                                                  unsigned terms);

/// a_p = sum_{1<=i_1<=...<=i_{s-1}<=p} 1/(i_1 ... i_{s-1}); a_p = 1 for s = 1.
double ap_coefficient(unsigned p, unsigned s);

/// Bound on (1/(1-2^(1-s))) sum_{p>P} a_p / (p 2^p) using a_p <= (1+ln p)^(s-1).
double zeta_tail_bound(unsigned s, unsigned terms);

/// zeta(s), s >= 2, from (1 - 2^(1-s)) zeta(s) = sum_p a_p / (p 2^p).
SeriesResult zeta_accelerated(unsigned s, double tol, std::uint64_t max_terms);

}  // namespace lerch::series
