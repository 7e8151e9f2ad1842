#pragma once

// Property harness binding the exact and binary64 layers. Every identity used
// to establish the multiple harmonic expansion is checked by name on a fixed
// grid and summarized in a VerificationReport.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lerch/rational.hpp"
#include "lerch/series.hpp"

namespace lerch::verify {

struct VerificationReport {
  std::string identity_name;
  std::string grid_description;
  std::uint64_t cases_run = 0;
  std::uint64_t cases_failed = 0;
  double worst_residual = 0.0;
  /// Acceptance threshold on worst_residual; 0 for exact identities.
  double tolerance = 0.0;
  std::vector<std::string> failing_cases;

  bool passed() const { return cases_failed == 0; }

  /// Adds one grid point. `ok` decides pass/fail; residual feeds the worst case.
  void record(const std::string& case_label, double residual, bool ok);
};

/// Combines reports for the same identity computed over disjoint sub-grids.
/// Associative and independent of argument order.
VerificationReport merge(const VerificationReport& a, const VerificationReport& b);

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& doc);

/// Default grids of the harness.
struct Grids {
  unsigned q_max = 12;
  unsigned s_max = 5;
  unsigned b_max = 8;
  unsigned t_max = 4;
  unsigned p_max_exact = 40;
  unsigned p_max_float = 200;
  unsigned p_max_euler = 30;
  unsigned s_max_float = 6;
  unsigned proposition_s_max = 3;
  unsigned sondow_terms = 80;
  double proposition_tol = 1e-10;
  double sondow_tol = 1e-12;
  std::vector<Rational> betas;
  std::vector<series::Complex> z_grid;
  std::vector<series::Complex> shifts;

  /// q_max = 12, s_max = 5, b_max = 8, t_max = 4, beta in
  /// {1, 1/2, 3/2, 2, 7/3, 5}, eight z with |z| <= 0.4 and
  /// alpha in {0, 1/2, i, -1/2 + i/2}.
  static Grids defaults();
};

std::vector<Rational> default_betas();
std::vector<series::Complex> default_z_grid();
std::vector<series::Complex> default_shifts();

/// Names of the identities in the proof of the alternating binomial lemma.
/// The lemma, recurrence and splitting suites together must report on each.
const std::vector<std::string>& lemma_proof_identities();

/// L(q, beta) == R(q, beta) exactly for q <= q_max, s <= s_max.
VerificationReport verify_lemma(unsigned q_max, unsigned s_max, const std::vector<Rational>& betas);

/// Induction anchors: L(0) = beta^-s = R(0), and
/// L(1) = 1/(beta(beta+1)) sum_{u+v=s-1} beta^-u (beta+1)^-v = R(1).
std::vector<VerificationReport> verify_base_cases(unsigned s_max, const std::vector<Rational>& betas);

/// L(q+1, beta) == L(q, beta) - L(q, beta+1) for 0 <= q, q+1 <= q_max.
VerificationReport verify_recurrence_L(unsigned q_max, unsigned s_max,
                                       const std::vector<Rational>& betas);

/// R(q+1, beta) == R(q, beta) - R(q, beta+1). The first report covers
/// 1 <= q <= q_max-1; the second, "recurrence_R_q0", covers q = 0.
std::vector<VerificationReport> verify_recurrence_R(unsigned q_max, unsigned s_max,
                                                    const std::vector<Rational>& betas);

/// f_0 S_0^q(t) - f_{q+1} S_1^{q+1}(t) = (f_0 - f_{q+1}) S_0^{q+1}(t)
///                                     = (q+1)/(beta(beta+q+1)) S_0^{q+1}(t).
VerificationReport verify_bracket_identity(unsigned q_max, unsigned t_max,
                                           const std::vector<Rational>& betas);

/// Two-part and three-part splitting of S_a^c(t), in that order.
std::vector<VerificationReport> verify_splitting(unsigned b_max, unsigned t_max,
                                                 const std::vector<Rational>& betas);

VerificationReport verify_proposition(const std::vector<series::Complex>& z_grid,
                                      const std::vector<series::Complex>& shifts, unsigned s_max,
                                      double tol);

VerificationReport verify_coefficient_bound(unsigned p_max,
                                            const std::vector<series::Complex>& shifts,
                                            unsigned s_max);

VerificationReport verify_ap_bound(unsigned p_max, unsigned s_max);

VerificationReport verify_sondow_form(unsigned s_max, unsigned terms, double tol);

/// coefficient_float vs coefficient_exact, relative tolerance rel_tol.
VerificationReport verify_coefficient_consistency(unsigned p_max,
                                                  const std::vector<Rational>& alphas,
                                                  unsigned s_max, double rel_tol = 1e-12);

/// Inner sum of the exchanged double series vs coefficient_float.
VerificationReport verify_euler_consistency(unsigned p_max,
                                            const std::vector<series::Complex>& shifts,
                                            unsigned s_max, double rel_tol = 1e-12);

const std::vector<std::string>& suite_names();

/// Runs one of lemma, recurrences, splitting, proposition, bounds, sondow or
/// all. Unknown names throw InvalidArgument.
std::vector<VerificationReport> run_suite(std::string_view name, const Grids& grids);

}  // namespace lerch::verify
