#include <doctest.h>

#include "lerch/errors.hpp"
#include "lerch/exact.hpp"
#include "oracles.hpp"

using lerch::Rational;
using namespace lerch::exact;

namespace {

const std::vector<Rational> kBetas = {Rational(1),    Rational(1, 2), Rational(3, 2),
                                      Rational(2),    Rational(7, 3), Rational(5)};

}  // namespace

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(7, 5), 0) == Rational(1));
  CHECK(pochhammer(Rational(1), 3) == Rational(6));
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer(Rational(-3, 2), 4) == Rational(9, 16));
  CHECK(pochhammer(Rational(-2), 5) == Rational(0));

  SUBCASE("rising step") {
    for (const auto& x : kBetas) {
      for (unsigned p = 0; p < 10; ++p) {
        CHECK(pochhammer(x, p + 1) == pochhammer(x, p) * (x + Rational(static_cast<long>(p))));
      }
    }
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(9, 0) == 1);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(7, 8) == 0);
  CHECK(binomial(7, -1) == 0);
  CHECK(binomial(60, 30) == lerch::BigInt("118264581564861424"));
}

TEST_CASE("multi_sum examples") {
  CHECK(multi_sum({.a = 3, .b = 7, .t = 0, .beta = Rational(1, 2)}) == Rational(1));
  CHECK(multi_sum({.a = 0, .b = 1, .t = 1, .beta = Rational(1)}) == Rational(3, 2));
  CHECK(multi_sum({.a = 0, .b = 0, .t = 2, .beta = Rational(2)}) == Rational(1, 4));
  CHECK(multi_sum({.a = 0, .b = 2, .t = 2, .beta = Rational(1)}) == Rational(85, 36));
  CHECK(multi_sum({.a = 2, .b = 5, .t = 3, .beta = Rational(7, 3)}) ==
        Rational(lerch::BigInt("9509042238255"), lerch::BigInt("82154028290048")));
}

TEST_CASE("multi_sum errors") {
  CHECK_THROWS_AS(multi_sum({.a = 3, .b = 2, .t = 1, .beta = Rational(1)}), lerch::InvalidArgument);
  // beta + 2 == 0 inside [0, 4].
  CHECK_THROWS_AS(multi_sum({.a = 0, .b = 4, .t = 2, .beta = Rational(-2)}), lerch::DivisionByZero);
  // Same beta is fine when the vanishing index is outside the range.
  CHECK(multi_sum({.a = 3, .b = 3, .t = 1, .beta = Rational(-2)}) == Rational(1));
}

TEST_CASE("multi_sum_bruteforce") {
  CHECK(multi_sum_bruteforce({.a = 0, .b = 4, .t = 0, .beta = Rational(1)}) == Rational(1));
  CHECK(multi_sum_bruteforce({.a = 0, .b = 2, .t = 2, .beta = Rational(1)}) == Rational(85, 36));
  CHECK(multi_sum_bruteforce({.a = 1, .b = 1, .t = 3, .beta = Rational(1, 2)}) == Rational(8, 27));
  CHECK(tuple_count(0, 2, 2) == 6);

  SUBCASE("cap") {
    const MultiSumSpec big{.a = 0, .b = 40, .t = 6, .beta = Rational(1)};
    try {
      (void)multi_sum_bruteforce(big, 1000);
      FAIL("expected CapExceeded");
    } catch (const lerch::CapExceeded& e) {
      CHECK(e.count() == tuple_count(0, 40, 6));
      CHECK(e.count() == 9366819);
    }
    CHECK(multi_sum_bruteforce({.a = 0, .b = 3, .t = 2, .beta = Rational(1)}, 10) ==
          multi_sum({.a = 0, .b = 3, .t = 2, .beta = Rational(1)}));
  }
}

TEST_CASE("multi_sum agrees with both enumerators") {
  for (const auto& beta : kBetas) {
    for (unsigned a = 0; a <= 3; ++a) {
      for (unsigned b = a; b <= 6; ++b) {
        for (unsigned t = 0; t <= 4; ++t) {
          const MultiSumSpec spec{.a = a, .b = b, .t = t, .beta = beta};
          const Rational fast = multi_sum(spec);
          CHECK(fast == multi_sum_bruteforce(spec));
          CHECK(fast == oracle::tuple_sum(a, b, t, beta));
        }
      }
    }
  }
}

TEST_CASE("lemma sides: examples") {
  const Rational one(1);
  CHECK(lemma_lhs({0, 3, Rational(2)}) == Rational(1, 8));
  CHECK(lemma_rhs({0, 3, Rational(2)}) == Rational(1, 8));
  CHECK(lemma_lhs({1, 1, one}) == Rational(1, 2));
  CHECK(lemma_lhs({2, 1, one}) == Rational(1, 3));
  CHECK(lemma_rhs({2, 1, one}) == Rational(1, 3));
  CHECK(lemma_rhs({1, 2, one}) == Rational(3, 4));
  CHECK(lemma_lhs({1, 2, one}) == Rational(3, 4));
  CHECK(lemma_lhs({2, 3, Rational(1, 2)}) == Rational(25216, 3375));
  CHECK(lemma_lhs({4, 3, Rational(3, 2)}) ==
        Rational(lerch::BigInt("5922098176"), lerch::BigInt("41601569625")));
}

TEST_CASE("lemma params reject nonpositive integer beta") {
  CHECK_THROWS_AS(LemmaParams(2, 2, Rational(0)), lerch::InvalidShift);
  CHECK_THROWS_AS(LemmaParams(2, 2, Rational(-3)), lerch::InvalidShift);
  CHECK_THROWS_AS(LemmaParams(2, 0, Rational(1)), lerch::InvalidArgument);
  CHECK_NOTHROW(LemmaParams(2, 2, Rational(-3, 2)));
}

TEST_CASE("lemma holds with negative non-integer beta") {
  for (const auto& beta : {Rational(-1, 2), Rational(-7, 3), Rational(-9, 4)}) {
    for (unsigned s = 1; s <= 4; ++s) {
      for (unsigned q = 0; q <= 8; ++q) {
        CHECK(lemma_lhs({q, s, beta}) == lemma_rhs({q, s, beta}));
      }
    }
  }
}

TEST_CASE("coefficient_exact examples") {
  for (const auto& alpha : {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(4)}) {
    for (unsigned s = 1; s <= 4; ++s) {
      CHECK(coefficient_exact(1, alpha, s) == -(Rational(1) / (alpha + Rational(1)).pow(s)));
    }
  }
  for (unsigned p = 1; p <= 12; ++p) {
    CHECK(coefficient_exact(p, Rational(0), 1) == Rational(-1, static_cast<long>(p)));
  }
  CHECK(coefficient_exact(3, Rational(0), 2) == Rational(-11, 18));
  CHECK(coefficient_exact(3, Rational(0), 3) == Rational(-85, 108));
  CHECK(coefficient_exact(4, Rational(-1, 2), 2) == Rational(-11264, 3675));
  CHECK(coefficient_exact(5, Rational(1, 2), 3) ==
        -Rational(lerch::BigInt("5922098176"), lerch::BigInt("41601569625")));
  CHECK(coefficient_exact(6, Rational(4, 3), 4) ==
        Rational(lerch::BigInt("-6430454067285689037327"), lerch::BigInt("535933200168609058816000")));
}

TEST_CASE("coefficient_exact errors") {
  CHECK_THROWS_AS(coefficient_exact(3, Rational(-2), 2), lerch::InvalidShift);
  CHECK_THROWS_AS(coefficient_exact(0, Rational(0), 2), lerch::InvalidArgument);
  CHECK_THROWS_AS(coefficient_exact(3, Rational(0), 0), lerch::InvalidArgument);
}

TEST_CASE("coefficient is negative for real alpha > -1") {
  for (const auto& alpha : {Rational(0), Rational(-1, 2), Rational(1, 2), Rational(4, 3)}) {
    for (unsigned s = 1; s <= 4; ++s) {
      for (unsigned p = 1; p <= 15; ++p) CHECK(coefficient_exact(p, alpha, s).sign() < 0);
    }
  }
}

TEST_CASE("inner sum of the exchanged series equals the coefficient") {
  for (const auto& beta : kBetas) {
    const Rational alpha = beta - Rational(1);
    for (unsigned s = 1; s <= 4; ++s) {
      for (unsigned p = 1; p <= 14; ++p) {
        CHECK(euler_inner_sum_exact(p, alpha, s) == coefficient_exact(p, alpha, s));
      }
    }
  }
}
