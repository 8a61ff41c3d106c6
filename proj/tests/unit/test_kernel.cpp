#include "bergman/errors.hpp"
#include "bergman/format.hpp"
#include "bergman/kernel.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace bergman;

TEST_CASE("triangular coefficient") {
  CHECK(triangular_coefficient(3, -1) == 0);
  CHECK(triangular_coefficient(3, 0) == 1);
  CHECK(triangular_coefficient(3, 2) == 3);
  CHECK(triangular_coefficient(3, 4) == 1);
  CHECK(triangular_coefficient(3, 5) == 0);
  CHECK(triangular_coefficient(1, 0) == 1);
}

TEST_CASE("permanent and coefficient index") {
  CHECK(permanent(IntMatrix2(3, 1, 1, 4)) == 13);
  CHECK(coefficient_index(IntMatrix2(3, 1, 1, 4), 4, 3) == 10);
  CHECK(coefficient_index(IntMatrix2(1, 3, 4, 1), 4, 3) == 10);
}

TEST_CASE("classical Hartogs triangle") {
  const KernelFormula f = hartogs_kernel({1, 1});
  CHECK(f.det_a == 1);
  CHECK(f.numerator == LaurentPoly2::monomial(0, 1));
  REQUIRE(f.denominator.size() == 2);
  CHECK(f.denominator[0].base ==
        LaurentPoly2::monomial(0, 1) - LaurentPoly2::monomial(1, 0));
  CHECK(f.denominator[1].base ==
        LaurentPoly2::constant(1) - LaurentPoly2::monomial(0, 1));
  CHECK(general_kernel(IntMatrix2(1, -1, 0, 1)).numerator == f.numerator);
}

TEST_CASE("hartogs parameter validation") {
  CHECK_NOTHROW(validate({1, 0}));
  CHECK_NOTHROW(validate({1, 1}));
  CHECK_THROWS_AS(validate({2, 0}), PreconditionViolated);
  CHECK_THROWS_AS(validate({0, 1}), PreconditionViolated);
  CHECK_THROWS_AS(validate({4, 2}), PreconditionViolated);
}

TEST_CASE("general kernel agrees with the Hartogs construction") {
  for (const auto& [k1, k2] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {5, 2}}) {
    const KernelFormula h = hartogs_kernel({k1, k2});
    const KernelFormula g = general_kernel(h.b);
    CHECK(g.a == h.a);
    CHECK(g.det_a == h.det_a);
    CHECK(g.numerator == h.numerator);
  }
}

TEST_CASE("bidisc kernel") {
  const KernelFormula f = general_kernel(IntMatrix2::identity());
  CHECK(f.det_a == 1);
  CHECK(f.numerator == LaurentPoly2::constant(1));
  const Complex v = eval_kernel(f, {Complex(0, 0), Complex(0, 0)},
                                {Complex(0, 0), Complex(0, 0)});
  CHECK(std::abs(v.real() - 1.0 / (M_PI * M_PI)) < 1e-15);
}

TEST_CASE("numerator support stays inside the bounds") {
  testing::Gen gen(21);
  for (int i = 0; i < 40; ++i) {
    const KernelFormula f = general_kernel(gen.bounded_matrix(5, 20));
    const SupportBounds bounds = support_bounds(f.a);
    for (const auto& [e, c] : f.numerator.terms()) {
      REQUIRE(bounds.contains(e.e1, e.e2));
      REQUIRE(f.numerator.coefficient(palindrome_partner(bounds, e)) == c);
    }
  }
}

TEST_CASE("evaluation on the singular set") {
  const KernelFormula f = hartogs_kernel({1, 1});
  const Point z{Complex(0.5, 0), Complex(0.5, 0)};
  CHECK_THROWS_AS(eval_kernel(f, z, {Complex(1, 0), Complex(1, 0)}), SingularEvaluation);
}

TEST_CASE("text and latex rendering") {
  const KernelFormula f = general_kernel(IntMatrix2(1, -2, -1, 4));
  const std::string latex = to_latex(f);
  CHECK(latex.find("\\frac{1}{2\\pi^{2}}") == 0);
  long depth = 0;
  for (char c : latex) {
    depth += (c == '{') - (c == '}');
    REQUIRE(depth >= 0);
  }
  CHECK(depth == 0);
  CHECK(to_text(f).find("t2^8") != std::string::npos);
  CHECK(to_latex(hartogs_kernel({1, 1})).find("\\frac{1}{\\pi^{2}}") == 0);
}
