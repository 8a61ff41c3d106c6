#include "bergman/errors.hpp"
#include "bergman/kernel.hpp"
#include "bergman/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace bergman;

TEST_CASE("adjugate identity on random matrices") {
  testing::Gen gen(101);
  for (int i = 0; i < 500; ++i) {
    const IntMatrix2 m(gen.uniform(-30, 30), gen.uniform(-30, 30),
                       gen.uniform(-30, 30), gen.uniform(-30, 30));
    const Integer d = det(m);
    REQUIRE(m * adjugate(m) == IntMatrix2(d, 0, 0, d));
    REQUIRE(adjugate(m) * m == IntMatrix2(d, 0, 0, d));
    if (d != 0) {
      const IntMatrix2 n = normalize(m);
      REQUIRE(det(n) == abs(d));
      REQUIRE(normalize(n) == n);
    }
  }
}

TEST_CASE("reduced adjugate columns are primitive and nonnegative") {
  testing::Gen gen(102);
  for (int i = 0; i < 300; ++i) {
    const IntMatrix2 b = gen.bounded_matrix(9, 1000);
    const ColumnReduction r = reduce_adjugate(b);
    const IntMatrix2 adj = adjugate(normalize(b));
    for (int col = 0; col < 2; ++col) {
      REQUIRE(gcd_abs(r.a(0, col), r.a(1, col)) == 1);
      REQUIRE(r.a(0, col) >= 0);
      REQUIRE(r.a(1, col) >= 0);
    }
    REQUIRE(adj(0, 0) == r.g1 * r.a(0, 0));
    REQUIRE(adj(1, 0) == r.g1 * r.a(1, 0));
    REQUIRE(adj(0, 1) == r.g2 * r.a(0, 1));
    REQUIRE(adj(1, 1) == r.g2 * r.a(1, 1));
    REQUIRE(det(r.a) > 0);
  }
}

TEST_CASE("kernel depends on the matrix only through the reduced adjugate") {
  testing::Gen gen(103);
  for (int i = 0; i < 30; ++i) {
    const IntMatrix2 b = gen.bounded_matrix(5, 20);
    const Integer s = gen.uniform(2, 4);
    const IntMatrix2 scaled(b(0, 0) * s, b(0, 1) * s, b(1, 0) * s, b(1, 1) * s);
    const IntMatrix2 swapped(b(1, 0), b(1, 1), b(0, 0), b(0, 1));
    REQUIRE(general_kernel(scaled).numerator == general_kernel(b).numerator);
    REQUIRE(general_kernel(swapped).numerator == general_kernel(b).numerator);
  }
}

TEST_CASE("closed form agrees with the series on random domains") {
  testing::Gen gen(105);
  for (int i = 0; i < 6; ++i) {
    const IntMatrix2 b = gen.bounded_matrix(3, 8);
    const DomainSpec spec(b);
    const KernelFormula f = general_kernel(b);
    for (const PointPair& pp : sample_points(spec, 3, static_cast<std::uint64_t>(i))) {
      const SeriesResult s = series_kernel(spec, pp.z, pp.w, 1e-8);
      const Complex c = eval_kernel(f, pp.z, pp.w);
      REQUIRE(std::abs(c - s.value) <= 1e-7 * std::abs(s.value));
    }
  }
}
