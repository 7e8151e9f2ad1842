#include <doctest.h>

#include <algorithm>
#include <set>

#include "lerch/errors.hpp"
#include "lerch/verify.hpp"

using lerch::Rational;
using namespace lerch::verify;

TEST_CASE("report bookkeeping and merge") {
  VerificationReport a;
  a.identity_name = "x";
  a.grid_description = "g1";
  a.record("c1", 0.0, true);
  a.record("c2", 0.5, false);
  CHECK(a.cases_run == 2);
  CHECK(a.cases_failed == 1);
  CHECK(a.failing_cases.size() == a.cases_failed);
  CHECK(a.worst_residual == 0.5);
  CHECK_FALSE(a.passed());

  VerificationReport b;
  b.identity_name = "x";
  b.grid_description = "g2";
  b.record("c3", 0.1, false);
  VerificationReport c;
  c.identity_name = "x";
  c.grid_description = "g0";
  c.record("c0", 0.0, true);

  const auto left = merge(merge(a, b), c);
  const auto right = merge(a, merge(b, c));
  const auto swapped = merge(c, merge(b, a));
  for (const auto& m : {left, right, swapped}) {
    CHECK(m.cases_run == 4);
    CHECK(m.cases_failed == 2);
    CHECK(m.worst_residual == 0.5);
    CHECK(m.grid_description == "g0 | g1 | g2");
    CHECK(m.failing_cases == std::vector<std::string>{"c2", "c3"});
  }
  VerificationReport other;
  other.identity_name = "y";
  CHECK_THROWS_AS(merge(a, other), lerch::InvalidArgument);
}

TEST_CASE("report JSON round trip") {
  VerificationReport r;
  r.identity_name = "lemma";
  r.grid_description = "q<=1";
  r.tolerance = 1e-10;
  r.record("q=0", 0.25, true);
  r.record("q=1", 3.0, false);
  const auto doc = to_json(r);
  CHECK(doc.at("identity_name") == "lemma");
  CHECK(doc.at("grid") == "q<=1");
  CHECK(doc.at("failing_cases").size() == 1);
  const auto back = report_from_json(nlohmann::json::parse(doc.dump()));
  CHECK(back.identity_name == r.identity_name);
  CHECK(back.grid_description == r.grid_description);
  CHECK(back.cases_run == r.cases_run);
  CHECK(back.cases_failed == r.cases_failed);
  CHECK(back.worst_residual == r.worst_residual);
  CHECK(back.tolerance == r.tolerance);
  CHECK(back.failing_cases == r.failing_cases);
}

TEST_CASE("lemma verification") {
  const auto betas = default_betas();
  const auto base = verify_lemma(0, 5, betas);
  CHECK(base.passed());
  CHECK(base.cases_run == 30);

  const auto single = verify_lemma(1, 2, {Rational(1)});
  CHECK(single.passed());
  CHECK(single.cases_run == 4);

  const auto full = verify_lemma(12, 5, betas);
  CHECK(full.cases_run == 390);
  CHECK(full.cases_failed == 0);
  CHECK(full.worst_residual == 0.0);

  CHECK_THROWS_AS(verify_lemma(3, 2, {Rational(0)}), lerch::InvalidShift);
  CHECK_THROWS_AS(verify_lemma(3, 2, {Rational(1), Rational(-4)}), lerch::InvalidShift);
}

TEST_CASE("recurrences and base cases") {
  const auto betas = default_betas();
  const auto base = verify_base_cases(5, betas);
  REQUIRE(base.size() == 2);
  CHECK(base[0].identity_name == "lemma_base_q0");
  CHECK(base[1].identity_name == "lemma_base_q1");
  CHECK(base[0].passed());
  CHECK(base[1].passed());

  const auto l = verify_recurrence_L(12, 5, betas);
  CHECK(l.passed());
  CHECK(l.cases_run == 12 * 5 * 6);

  const auto r = verify_recurrence_R(12, 5, betas);
  REQUIRE(r.size() == 2);
  CHECK(r[0].identity_name == "recurrence_R");
  CHECK(r[0].cases_run == 11 * 5 * 6);
  CHECK(r[0].passed());
  CHECK(r[1].identity_name == "recurrence_R_q0");
  CHECK(r[1].cases_run == 5 * 6);
  CHECK(r[1].passed());

  const auto bracket = verify_bracket_identity(12, 4, betas);
  CHECK(bracket.passed());
  CHECK(bracket.cases_run == 12 * 5 * 6);
}

TEST_CASE("splitting identities") {
  const auto reports = verify_splitting(8, 4, default_betas());
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].identity_name == "splitting_two_part");
  CHECK(reports[1].identity_name == "splitting_three_part");
  // Triples 0 <= a <= b < c <= 8: C(10, 3) = 120.
  CHECK(reports[0].cases_run == 120 * 5 * 6);
  // Pairs 1 <= a <= b <= 7: 28.
  CHECK(reports[1].cases_run == 28 * 5 * 6);
  CHECK(reports[0].passed());
  CHECK(reports[1].passed());
}

TEST_CASE("float verifications") {
  const auto prop = verify_proposition(default_z_grid(), default_shifts(), 3, 1e-10);
  CHECK(prop.cases_run == 8 * 4 * 3);
  CHECK(prop.passed());
  CHECK(prop.worst_residual <= 1e-10);
  CHECK_THROWS_AS(verify_proposition({{0.5, 0.0}}, default_shifts(), 1, 1e-10), lerch::DomainError);

  const auto bound = verify_coefficient_bound(200, default_shifts(), 6);
  CHECK(bound.passed());
  CHECK(bound.cases_run == 200 * 4 * 6);

  const auto ap = verify_ap_bound(200, 6);
  CHECK(ap.passed());
  CHECK(ap.cases_run == 1200);

  const auto sondow = verify_sondow_form(6, 80, 1e-12);
  CHECK(sondow.passed());
  CHECK(sondow.cases_run == 6 + 5);

  std::vector<Rational> alphas;
  for (const auto& beta : default_betas()) alphas.push_back(beta - Rational(1));
  const auto consistency = verify_coefficient_consistency(40, alphas, 5);
  CHECK(consistency.passed());
  const auto euler = verify_euler_consistency(30, default_shifts(), 5);
  CHECK(euler.passed());
}

TEST_CASE("suites cover every lemma-proof identity") {
  const auto grids = Grids::defaults();
  std::set<std::string> reported;
  for (const char* suite : {"lemma", "recurrences", "splitting"}) {
    for (const auto& r : run_suite(suite, grids)) {
      reported.insert(r.identity_name);
      CHECK(r.passed());
      CHECK(r.worst_residual <= r.tolerance);
    }
  }
  for (const auto& name : lemma_proof_identities()) {
    INFO("identity: " << name);
    CHECK(reported.count(name) == 1);
  }
  CHECK(reported.count("recurrence_R_q0") == 1);
}

TEST_CASE("run_suite") {
  const auto grids = Grids::defaults();
  const auto lemma = run_suite("lemma", grids);
  REQUIRE(lemma.size() == 1);
  CHECK(lemma[0].cases_run == 390);

  const auto all = run_suite("all", grids);
  std::set<std::string> names;
  for (const auto& r : all) {
    names.insert(r.identity_name);
    INFO(r.identity_name);
    CHECK(r.passed());
    CHECK(r.failing_cases.size() == r.cases_failed);
  }
  CHECK(names.size() == all.size());
  CHECK(names.count("proposition") == 1);
  CHECK(names.count("sondow_form") == 1);
  CHECK_THROWS_AS(run_suite("nope", grids), lerch::InvalidArgument);
}
