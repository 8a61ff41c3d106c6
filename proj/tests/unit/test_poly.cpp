#include "bergman/errors.hpp"
#include "bergman/poly.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace bergman;

namespace {

LaurentPoly2 random_poly(testing::Gen& gen) {
  LaurentPoly2 p;
  const auto n = gen.uniform(0, 5);
  for (std::int64_t i = 0; i < n; ++i) {
    p.add_term({gen.uniform(-3, 4), gen.uniform(-3, 4)},
               Rational(gen.uniform(-9, 9), gen.uniform(1, 5)));
  }
  return p;
}

}  // namespace

TEST_CASE("zero coefficients are dropped") {
  LaurentPoly2 p = LaurentPoly2::monomial(1, 2, 3);
  p.add_term({1, 2}, -3);
  CHECK(p.is_zero());
  CHECK((LaurentPoly2::monomial(2, 0) - LaurentPoly2::monomial(2, 0)).is_zero());
  CHECK(LaurentPoly2::monomial(0, 0, 0).size() == 0);
}

TEST_CASE("multiplication collects like terms") {
  const LaurentPoly2 x = LaurentPoly2::monomial(1, 0);
  const LaurentPoly2 one = LaurentPoly2::constant(1);
  const LaurentPoly2 sq = (one + x) * (one + x);
  CHECK(sq.size() == 3);
  CHECK(sq.coefficient({1, 0}) == 2);
  CHECK(pow(one - x, 3).coefficient({2, 0}) == 3);
  CHECK(pow(x, 0) == one);
}

TEST_CASE("ring axioms on random Laurent polynomials") {
  testing::Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly2 p = random_poly(gen);
    const LaurentPoly2 q = random_poly(gen);
    const LaurentPoly2 r = random_poly(gen);
    REQUIRE(p + q == q + p);
    REQUIRE(p * q == q * p);
    REQUIRE((p * q) * r == p * (q * r));
    REQUIRE(p * (q + r) == p * q + p * r);
    REQUIRE((p - p).is_zero());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  testing::Gen gen(12);
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly2 p = random_poly(gen);
    const LaurentPoly2 q = random_poly(gen);
    const Complex t1(gen.real(0.3, 0.9), gen.real(-0.5, 0.5));
    const Complex t2(gen.real(-0.9, -0.3), gen.real(-0.5, 0.5));
    const Complex lhs = (p * q).eval(t1, t2);
    const Complex rhs = p.eval(t1, t2) * q.eval(t1, t2);
    REQUIRE(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("integer powers of complex numbers") {
  CHECK(std::abs(ipow(Complex(0, 1), 4) - Complex(1, 0)) < 1e-15);
  CHECK(std::abs(ipow(Complex(2, 0), -3) - Complex(0.125, 0)) < 1e-15);
  CHECK(ipow(Complex(0, 0), 0) == Complex(1, 0));
  CHECK_THROWS_AS(ipow(Complex(0, 0), -1), DivisionByZero);
}

TEST_CASE("univariate division") {
  const LaurentPoly2 one = LaurentPoly2::constant(1);
  const LaurentPoly2 x = LaurentPoly2::monomial(1, 0);
  const UnivariateDivision d = divide_in_t1(one - pow(x, 5), one - x);
  CHECK(d.remainder.is_zero());
  CHECK(d.quotient == one + x + pow(x, 2) + pow(x, 3) + pow(x, 4));
  const UnivariateDivision e = divide_in_t1(pow(x, 2) + one, x + one);
  CHECK(e.remainder == LaurentPoly2::constant(2));
  CHECK_THROWS_AS(divide_in_t1(one, LaurentPoly2()), DivisionByZero);
}

TEST_CASE("squared cyclotomic expansion") {
  const LaurentPoly2 e = expand_square_cyclotomic(3);
  CHECK(e.coefficient({0, 0}) == 1);
  CHECK(e.coefficient({2, 0}) == 3);
  CHECK(e.coefficient({4, 0}) == 1);
  CHECK(e.size() == 5);
  CHECK_THROWS_AS(expand_square_cyclotomic(0), PreconditionViolated);
}
