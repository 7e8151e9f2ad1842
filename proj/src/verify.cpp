#include "lerch/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "lerch/errors.hpp"
#include "lerch/exact.hpp"

namespace lerch::verify {

namespace {

using series::Complex;
using series::ShiftParam;

double exact_residual(const Rational& lhs, const Rational& rhs) {
  return (lhs - rhs).abs().to_double();
}

// Absolute residual for |reference| <= 1, relative otherwise.
double scaled_residual(Complex value, Complex reference) {
  return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

double relative_residual(Complex value, Complex reference) {
  const double scale = std::abs(reference);
  return scale == 0.0 ? std::abs(value) : std::abs(value - reference) / scale;
}

std::string format_complex(Complex z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

std::string join_rationals(const std::vector<Rational>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ", ";
    out += values[i].to_string();
  }
  return out + "}";
}

std::string join_complex(const std::vector<Complex>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ", ";
    out += format_complex(values[i]);
  }
  return out + "}";
}

void validate_betas(const std::vector<Rational>& betas) {
  if (betas.empty()) throw InvalidArgument("beta grid is empty");
  for (const auto& beta : betas) {
    if (exact::is_nonpositive_integer(beta)) {
      throw InvalidShift("beta must avoid {0, -1, -2, ...}, got " + beta.to_string());
    }
  }
}

VerificationReport make_report(std::string name, std::string grid, double tolerance = 0.0) {
  VerificationReport report;
  report.identity_name = std::move(name);
  report.grid_description = std::move(grid);
  report.tolerance = tolerance;
  return report;
}

void record_exact(VerificationReport& report, const std::string& label, const Rational& lhs,
                  const Rational& rhs) {
  report.record(label, exact_residual(lhs, rhs), lhs == rhs);
}

std::string lemma_label(unsigned q, unsigned s, const Rational& beta) {
  return "q=" + std::to_string(q) + ",s=" + std::to_string(s) + ",beta=" + beta.to_string();
}

Rational S(unsigned a, unsigned b, unsigned t, const Rational& beta) {
  return exact::multi_sum({.a = a, .b = b, .t = t, .beta = beta});
}

Rational f(unsigned n, const Rational& beta) {
  return Rational(1) / (beta + Rational(static_cast<long>(n)));
}

std::vector<Complex> merged_shifts(const Grids& grids) {
  std::vector<Complex> shifts = grids.shifts;
  for (const auto& beta : grids.betas) {
    const Complex alpha((beta - Rational(1)).to_double(), 0.0);
    if (std::find(shifts.begin(), shifts.end(), alpha) == shifts.end()) shifts.push_back(alpha);
  }
  return shifts;
}

std::vector<Rational> alphas_from_betas(const std::vector<Rational>& betas) {
  std::vector<Rational> alphas;
  alphas.reserve(betas.size());
  for (const auto& beta : betas) alphas.push_back(beta - Rational(1));
  return alphas;
}

}  // namespace

void VerificationReport::record(const std::string& case_label, double residual, bool ok) {
  ++cases_run;
  if (std::isnan(residual)) {
    residual = std::numeric_limits<double>::infinity();
    ok = false;
  }
  worst_residual = std::max(worst_residual, residual);
  if (!ok) {
    ++cases_failed;
    failing_cases.push_back(case_label);
  }
}

VerificationReport merge(const VerificationReport& a, const VerificationReport& b) {
  if (a.identity_name != b.identity_name) {
    throw InvalidArgument("cannot merge reports for '" + a.identity_name + "' and '" +
                          b.identity_name + "'");
  }
  auto split = [](const std::string& text, std::set<std::string>& out) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto bar = text.find(" | ", start);
      const auto piece = text.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
      if (!piece.empty()) out.insert(piece);
      if (bar == std::string::npos) break;
      start = bar + 3;
    }
  };
  std::set<std::string> grids;
  split(a.grid_description, grids);
  split(b.grid_description, grids);

  VerificationReport merged;
  merged.identity_name = a.identity_name;
  for (const auto& g : grids) {
    if (!merged.grid_description.empty()) merged.grid_description += " | ";
    merged.grid_description += g;
  }
  merged.cases_run = a.cases_run + b.cases_run;
  merged.cases_failed = a.cases_failed + b.cases_failed;
  merged.worst_residual = std::max(a.worst_residual, b.worst_residual);
  merged.tolerance = std::max(a.tolerance, b.tolerance);
  merged.failing_cases = a.failing_cases;
  merged.failing_cases.insert(merged.failing_cases.end(), b.failing_cases.begin(),
                              b.failing_cases.end());
  std::sort(merged.failing_cases.begin(), merged.failing_cases.end());
  return merged;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json doc;
  doc["identity_name"] = report.identity_name;
  doc["grid"] = report.grid_description;
  doc["cases_run"] = report.cases_run;
  doc["cases_failed"] = report.cases_failed;
  if (std::isfinite(report.worst_residual)) {
    doc["worst_residual"] = report.worst_residual;
  } else {
    doc["worst_residual"] = nullptr;
  }
  doc["tolerance"] = report.tolerance;
  doc["failing_cases"] = report.failing_cases;
  return doc;
}

VerificationReport report_from_json(const nlohmann::json& doc) {
  VerificationReport report;
  report.identity_name = doc.at("identity_name").get<std::string>();
  report.grid_description = doc.at("grid").get<std::string>();
  report.cases_run = doc.at("cases_run").get<std::uint64_t>();
  report.cases_failed = doc.at("cases_failed").get<std::uint64_t>();
  const auto& worst = doc.at("worst_residual");
  report.worst_residual =
      worst.is_null() ? std::numeric_limits<double>::infinity() : worst.get<double>();
  report.tolerance = doc.value("tolerance", 0.0);
  report.failing_cases = doc.at("failing_cases").get<std::vector<std::string>>();
  return report;
}

std::vector<Rational> default_betas() {
  return {Rational(1), Rational(1, 2), Rational(3, 2), Rational(2), Rational(7, 3), Rational(5)};
}

std::vector<Complex> default_z_grid() {
  return {{0.4, 0.0},  {-0.4, 0.0},   {0.0, 0.4},    {0.0, -0.4},
          {0.3, 0.0},  {0.2, 0.2},    {-0.25, 0.3},  {0.1, -0.35}};
}

std::vector<Complex> default_shifts() { return {{0.0, 0.0}, {0.5, 0.0}, {0.0, 1.0}, {-0.5, 0.5}}; }

Grids Grids::defaults() {
  Grids grids;
  grids.betas = default_betas();
  grids.z_grid = default_z_grid();
  grids.shifts = default_shifts();
  return grids;
}

const std::vector<std::string>& lemma_proof_identities() {
  static const std::vector<std::string> names = {
      "lemma_base_q0",      "lemma_base_q1",        "recurrence_L",     "recurrence_R",
      "bracket_identity",   "splitting_two_part",   "splitting_three_part", "lemma"};
  return names;
}

VerificationReport verify_lemma(unsigned q_max, unsigned s_max, const std::vector<Rational>& betas) {
  validate_betas(betas);
  auto report = make_report("lemma", "q<=" + std::to_string(q_max) + ", s<=" +
                                         std::to_string(s_max) + ", beta in " + join_rationals(betas));
  for (const auto& beta : betas) {
    for (unsigned s = 1; s <= s_max; ++s) {
      for (unsigned q = 0; q <= q_max; ++q) {
        const exact::LemmaParams params(q, s, beta);
        record_exact(report, lemma_label(q, s, beta), exact::lemma_lhs(params),
                     exact::lemma_rhs(params));
      }
    }
  }
  return report;
}

std::vector<VerificationReport> verify_base_cases(unsigned s_max,
                                                  const std::vector<Rational>& betas) {
  validate_betas(betas);
  const std::string grid = "s<=" + std::to_string(s_max) + ", beta in " + join_rationals(betas);
  auto q0 = make_report("lemma_base_q0", grid);
  auto q1 = make_report("lemma_base_q1", grid);
  for (const auto& beta : betas) {
    for (unsigned s = 1; s <= s_max; ++s) {
      const auto label = "s=" + std::to_string(s) + ",beta=" + beta.to_string();
      const Rational beta_pow = beta.pow(-static_cast<long>(s));
      const exact::LemmaParams p0(0, s, beta);
      const Rational l0 = exact::lemma_lhs(p0);
      const Rational r0 = exact::lemma_rhs(p0);
      q0.record(label, std::max(exact_residual(l0, beta_pow), exact_residual(r0, beta_pow)),
                l0 == beta_pow && r0 == beta_pow);

      const Rational next = beta + Rational(1);
      Rational middle(0);
      for (unsigned u = 0; u + 1 <= s; ++u) {
        const unsigned v = s - 1 - u;
        middle += beta.pow(-static_cast<long>(u)) * next.pow(-static_cast<long>(v));
      }
      middle /= beta * next;
      const exact::LemmaParams p1(1, s, beta);
      const Rational l1 = exact::lemma_lhs(p1);
      const Rational r1 = exact::lemma_rhs(p1);
      const Rational direct = beta.pow(-static_cast<long>(s)) - next.pow(-static_cast<long>(s));
      q1.record(label,
                std::max({exact_residual(l1, direct), exact_residual(direct, middle),
                          exact_residual(middle, r1)}),
                l1 == direct && direct == middle && middle == r1);
    }
  }
  return {q0, q1};
}

VerificationReport verify_recurrence_L(unsigned q_max, unsigned s_max,
                                       const std::vector<Rational>& betas) {
  validate_betas(betas);
  auto report = make_report("recurrence_L", "0<=q<=" + std::to_string(q_max == 0 ? 0 : q_max - 1) +
                                                " (step to q+1<=" + std::to_string(q_max) +
                                                "), s<=" + std::to_string(s_max) + ", beta in " +
                                                join_rationals(betas));
  for (const auto& beta : betas) {
    const Rational shifted = beta + Rational(1);
    for (unsigned s = 1; s <= s_max; ++s) {
      for (unsigned q = 0; q + 1 <= q_max; ++q) {
        const Rational lhs = exact::lemma_lhs({q + 1, s, beta});
        const Rational rhs = exact::lemma_lhs({q, s, beta}) - exact::lemma_lhs({q, s, shifted});
        record_exact(report, lemma_label(q, s, beta), lhs, rhs);
      }
    }
  }
  return report;
}

std::vector<VerificationReport> verify_recurrence_R(unsigned q_max, unsigned s_max,
                                                    const std::vector<Rational>& betas) {
  validate_betas(betas);
  const std::string tail = ", s<=" + std::to_string(s_max) + ", beta in " + join_rationals(betas);
  auto main = make_report("recurrence_R", "1<=q<=" + std::to_string(q_max == 0 ? 0 : q_max - 1) +
                                              " (step to q+1<=" + std::to_string(q_max) + ")" + tail);
  auto base = make_report("recurrence_R_q0", "q=0" + tail);
  for (const auto& beta : betas) {
    const Rational shifted = beta + Rational(1);
    for (unsigned s = 1; s <= s_max; ++s) {
      for (unsigned q = 0; q + 1 <= std::max(q_max, 1U); ++q) {
        const Rational lhs = exact::lemma_rhs({q + 1, s, beta});
        const Rational rhs = exact::lemma_rhs({q, s, beta}) - exact::lemma_rhs({q, s, shifted});
        record_exact(q == 0 ? base : main, lemma_label(q, s, beta), lhs, rhs);
      }
    }
  }
  return {main, base};
}

VerificationReport verify_bracket_identity(unsigned q_max, unsigned t_max,
                                           const std::vector<Rational>& betas) {
  validate_betas(betas);
  auto report = make_report("bracket_identity", "1<=q<=" + std::to_string(q_max) + ", t<=" +
                                                    std::to_string(t_max) + ", beta in " +
                                                    join_rationals(betas));
  for (const auto& beta : betas) {
    for (unsigned t = 0; t <= t_max; ++t) {
      for (unsigned q = 1; q <= q_max; ++q) {
        const Rational f0 = f(0, beta);
        const Rational fq1 = f(q + 1, beta);
        const Rational bracket = f0 * S(0, q, t, beta) - fq1 * S(1, q + 1, t, beta);
        const Rational difference_form = (f0 - fq1) * S(0, q + 1, t, beta);
        const Rational closed_form = Rational(static_cast<long>(q + 1)) /
                                     (beta * (beta + Rational(static_cast<long>(q + 1)))) *
                                     S(0, q + 1, t, beta);
        const auto label = "q=" + std::to_string(q) + ",t=" + std::to_string(t) +
                           ",beta=" + beta.to_string();
        report.record(label,
                      std::max(exact_residual(bracket, difference_form),
                               exact_residual(difference_form, closed_form)),
                      bracket == difference_form && difference_form == closed_form);
      }
    }
  }
  return report;
}

std::vector<VerificationReport> verify_splitting(unsigned b_max, unsigned t_max,
                                                 const std::vector<Rational>& betas) {
  validate_betas(betas);
  const std::string tail = ", t<=" + std::to_string(t_max) + ", beta in " + join_rationals(betas);
  auto two = make_report("splitting_two_part", "0<=a<=b<c<=" + std::to_string(b_max) + tail);
  auto three = make_report("splitting_three_part",
                           "1<=a<=b<=" + std::to_string(b_max == 0 ? 0 : b_max - 1) + tail);
  for (const auto& beta : betas) {
    for (unsigned t = 0; t <= t_max; ++t) {
      for (unsigned c = 1; c <= b_max; ++c) {
        for (unsigned b = 0; b < c; ++b) {
          for (unsigned a = 0; a <= b; ++a) {
            Rational split(0);
            for (unsigned u = 0; u <= t; ++u) split += S(a, b, u, beta) * S(b + 1, c, t - u, beta);
            record_exact(two,
                         "a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",c=" +
                             std::to_string(c) + ",t=" + std::to_string(t) + ",beta=" + beta.to_string(),
                         S(a, c, t, beta), split);
          }
        }
      }
      for (unsigned b = 1; b + 1 <= b_max; ++b) {
        for (unsigned a = 1; a <= b; ++a) {
          const Rational lo = f(a - 1, beta);
          const Rational hi = f(b + 1, beta);
          Rational split(0);
          for (unsigned u = 0; u <= t; ++u) {
            for (unsigned v = 0; u + v <= t; ++v) {
              const unsigned w = t - u - v;
              split += lo.pow(u) * S(a, b, v, beta) * hi.pow(w);
            }
          }
          record_exact(three,
                       "a=" + std::to_string(a) + ",b=" + std::to_string(b) + ",t=" +
                           std::to_string(t) + ",beta=" + beta.to_string(),
                       S(a - 1, b + 1, t, beta), split);
        }
      }
    }
  }
  return {two, three};
}

VerificationReport verify_proposition(const std::vector<Complex>& z_grid,
                                      const std::vector<Complex>& shifts, unsigned s_max,
                                      double tol) {
  auto report = make_report("proposition",
                            "z in " + join_complex(z_grid) + ", alpha in " + join_complex(shifts) +
                                ", s<=" + std::to_string(s_max),
                            tol);
  const double eval_tol = std::max(series::kMinTolerance, tol * 1e-2);
  constexpr std::uint64_t kMaxTerms = 10000;
  for (const auto& z : z_grid) {
    if (std::abs(z) > 0.4 + 1e-15) {
      throw DomainError("proposition grid requires |z| <= 0.4, got " + format_complex(z));
    }
  }
  for (const auto& alpha : shifts) {
    const ShiftParam shift(alpha);
    for (unsigned s = 1; s <= s_max; ++s) {
      for (const auto& z : z_grid) {
        const Complex w = series::w_from_z(z);
        const auto accelerated = series::lerch_accelerated_z(z, shift, s, eval_tol, kMaxTerms);
        const auto direct = series::lerch_direct(w, shift, s, eval_tol, kMaxTerms);
        const double residual = scaled_residual(accelerated.value, direct.value);
        report.record("z=" + format_complex(z) + ",alpha=" + format_complex(alpha) +
                          ",s=" + std::to_string(s),
                      residual, accelerated.converged && direct.converged && residual <= tol);
      }
    }
  }
  return report;
}

VerificationReport verify_coefficient_bound(unsigned p_max, const std::vector<Complex>& shifts,
                                            unsigned s_max) {
  constexpr double kSlack = 1e-10;
  auto report = make_report("coefficient_bound", "p<=" + std::to_string(p_max) + ", alpha in " +
                                                     join_complex(shifts) + ", s<=" +
                                                     std::to_string(s_max),
                            kSlack);
  for (const auto& alpha : shifts) {
    const ShiftParam shift(alpha);
    for (unsigned s = 1; s <= s_max; ++s) {
      series::CoefficientSequence seq(shift, s);
      for (unsigned p = 1; p <= p_max; ++p) {
        const double magnitude = std::abs(seq.next());
        const double bound = series::coefficient_bound(p, shift, s);
        // Residual: relative excess over the majorant (<= 0 when it holds).
        const double excess = std::max(0.0, magnitude / bound - 1.0);
        report.record("p=" + std::to_string(p) + ",alpha=" + format_complex(alpha) +
                          ",s=" + std::to_string(s),
                      excess, magnitude <= bound * (1.0 + kSlack));
      }
    }
  }
  return report;
}

VerificationReport verify_ap_bound(unsigned p_max, unsigned s_max) {
  auto report = make_report("ap_bound", "p<=" + std::to_string(p_max) + ", s<=" +
                                            std::to_string(s_max));
  for (unsigned s = 1; s <= s_max; ++s) {
    double previous = 0.0;
    for (unsigned p = 1; p <= p_max; ++p) {
      const double ap = series::ap_coefficient(p, s);
      const double bound = std::pow(1.0 + std::log(static_cast<double>(p)), static_cast<double>(s - 1));
      const bool ok = ap > 0.0 && ap <= bound * (1.0 + 1e-14) && ap >= previous;
      report.record("p=" + std::to_string(p) + ",s=" + std::to_string(s),
                    std::max(0.0, ap - bound), ok);
      previous = ap;
    }
  }
  return report;
}

VerificationReport verify_sondow_form(unsigned s_max, unsigned terms, double tol) {
  auto report = make_report("sondow_form", "alpha=0, z=1/2, s<=" + std::to_string(s_max) +
                                               ", P=" + std::to_string(terms),
                            tol);
  const ShiftParam zero_shift(Complex(0.0, 0.0));
  const double eval_tol = std::max(series::kMinTolerance, tol * 1e-1);
  for (unsigned s = 1; s <= s_max; ++s) {
    const Complex euler = series::euler_transform_eval({0.5, 0.0}, zero_shift, s, terms);
    const auto accelerated = series::lerch_accelerated({-1.0, 0.0}, zero_shift, s, eval_tol, 10000);
    const double r1 = scaled_residual(euler, accelerated.value);
    report.record("s=" + std::to_string(s) + ",vs=accelerated", r1,
                  accelerated.converged && r1 <= tol);
    if (s >= 2) {
      const auto zeta = series::zeta_accelerated(s, eval_tol, 10000);
      const double factor = 1.0 - std::ldexp(1.0, 1 - static_cast<int>(s));
      const Complex reference(-factor * zeta.value.real(), 0.0);
      const double r2 = scaled_residual(euler, reference);
      report.record("s=" + std::to_string(s) + ",vs=zeta", r2, zeta.converged && r2 <= tol);
    }
  }
  return report;
}

VerificationReport verify_coefficient_consistency(unsigned p_max, const std::vector<Rational>& alphas,
                                                  unsigned s_max, double rel_tol) {
  auto report = make_report("coefficient_consistency", "p<=" + std::to_string(p_max) +
                                                           ", alpha in " + join_rationals(alphas) +
                                                           ", s<=" + std::to_string(s_max),
                            rel_tol);
  for (const auto& alpha : alphas) {
    const ShiftParam shift(Complex(alpha.to_double(), 0.0));
    for (unsigned s = 1; s <= s_max; ++s) {
      series::CoefficientSequence seq(shift, s);
      for (unsigned p = 1; p <= p_max; ++p) {
        const Complex value = seq.next();
        const Complex reference(exact::coefficient_exact(p, alpha, s).to_double(), 0.0);
        const double residual = relative_residual(value, reference);
        report.record("p=" + std::to_string(p) + ",alpha=" + alpha.to_string() +
                          ",s=" + std::to_string(s),
                      residual, residual <= rel_tol);
      }
    }
  }
  return report;
}

VerificationReport verify_euler_consistency(unsigned p_max, const std::vector<Complex>& shifts,
                                            unsigned s_max, double rel_tol) {
  auto report = make_report("euler_consistency", "p<=" + std::to_string(p_max) + ", alpha in " +
                                                     join_complex(shifts) + ", s<=" +
                                                     std::to_string(s_max),
                            rel_tol);
  for (const auto& alpha : shifts) {
    const ShiftParam shift(alpha);
    for (unsigned s = 1; s <= s_max; ++s) {
      series::CoefficientSequence seq(shift, s);
      for (unsigned p = 1; p <= p_max; ++p) {
        const Complex coefficient = seq.next();
        const Complex inner = series::euler_inner_sum(p, shift, s);
        const double residual = relative_residual(inner, coefficient);
        report.record("p=" + std::to_string(p) + ",alpha=" + format_complex(alpha) +
                          ",s=" + std::to_string(s),
                      residual, residual <= rel_tol);
      }
    }
  }
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lemma",       "recurrences", "splitting",
                                                 "proposition", "bounds",      "sondow",
                                                 "all"};
  return names;
}

std::vector<VerificationReport> run_suite(std::string_view name, const Grids& grids) {
  std::vector<VerificationReport> reports;
  auto append = [&](std::vector<VerificationReport> more) {
    for (auto& r : more) reports.push_back(std::move(r));
  };
  const bool all = name == "all";
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw InvalidArgument("unknown suite '" + std::string(name) + "'");
  }
  if (all || name == "lemma") {
    reports.push_back(verify_lemma(grids.q_max, grids.s_max, grids.betas));
  }
  if (all || name == "recurrences") {
    append(verify_base_cases(grids.s_max, grids.betas));
    reports.push_back(verify_recurrence_L(grids.q_max, grids.s_max, grids.betas));
    append(verify_recurrence_R(grids.q_max, grids.s_max, grids.betas));
    reports.push_back(verify_bracket_identity(grids.q_max, grids.t_max, grids.betas));
  }
  if (all || name == "splitting") {
    append(verify_splitting(grids.b_max, grids.t_max, grids.betas));
  }
  if (all || name == "proposition") {
    reports.push_back(verify_proposition(grids.z_grid, grids.shifts, grids.proposition_s_max,
                                         grids.proposition_tol));
  }
  if (all || name == "bounds") {
    reports.push_back(verify_coefficient_bound(grids.p_max_float, merged_shifts(grids),
                                               grids.s_max_float));
    reports.push_back(verify_ap_bound(grids.p_max_float, grids.s_max_float));
    reports.push_back(verify_coefficient_consistency(grids.p_max_exact, alphas_from_betas(grids.betas),
                                                     grids.s_max));
    reports.push_back(verify_euler_consistency(grids.p_max_euler, merged_shifts(grids), grids.s_max));
  }
  if (all || name == "sondow") {
    reports.push_back(verify_sondow_form(grids.s_max_float, grids.sondow_terms, grids.sondow_tol));
  }
  return reports;
}

}  // namespace lerch::verify
